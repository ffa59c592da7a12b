#include "lefdec/closure.hpp"

#include "lefdec/diagrams.hpp"
#include "lefdec/errors.hpp"
#include "lefdec/parallel.hpp"

namespace lefdec {

bool WitnessedSpan::insert(const Mat& m, WitnessCombo witness) {
  bool grew = builder_.insert(flatten(m), std::move(witness));
  if (grew) {
    basis_.clear();
    basis_.reserve(builder_.rows().size());
    for (const auto& row : builder_.rows())
      basis_.push_back(unflatten(field(), side_, side_, row.v));
  }
  return grew;
}

std::optional<std::pair<std::vector<Scalar>, WitnessCombo>>
WitnessedSpan::express(const Mat& m) const {
  auto coords = builder_.coordinates(flatten(m));
  if (!coords) return std::nullopt;
  WitnessCombo combo;
  for (size_t k = 0; k < coords->size(); ++k)
    payload_axpy(combo, (*coords)[k], builder_.rows()[k].payload);
  return std::make_pair(std::move(*coords), std::move(combo));
}

OperatorSpan WitnessedSpan::to_operator_span() const {
  return OperatorSpan::from_mats(field(), side_, basis_);
}

namespace {

std::int64_t checked_power_dim(int m, int n, const Budgets& budgets) {
  std::int64_t dim = 1;
  for (int k = 0; k < n; ++k) {
    dim *= m;
    if (dim > budgets.max_operator_dim)
      throw SizeBudgetExceeded(dim, budgets.max_operator_dim);
  }
  return dim;
}

}  // namespace

std::vector<BnGenerator> bn_generators(const PolarizedData& data, int n,
                                       const Budgets& budgets) {
  if (n < 1) throw InvalidParams("bn_generators: n must be >= 1");
  checked_power_dim(data.m(), n, budgets);
  std::vector<BnGenerator> gens;
  if (n == 1) {
    GeneratorAtom id = GeneratorAtom::make_perm(Perm::identity(1));
    gens.push_back({id, eval_atom(id, data, n)});
  }
  for (int k = 0; k + 1 < n; ++k) {
    GeneratorAtom a = GeneratorAtom::make_perm(Perm::transposition(n, k));
    gens.push_back({a, eval_atom(a, data, n)});
  }
  for (int j = 0; j < static_cast<int>(data.e_basis().size()); ++j) {
    GeneratorAtom a = GeneratorAtom::make_endo(j);
    gens.push_back({a, eval_atom(a, data, n)});
  }
  if (n >= 2) {
    GeneratorAtom a = GeneratorAtom::make_proj();
    gens.push_back({a, eval_atom(a, data, n)});
  }
  return gens;
}

WitnessedSpan algebra_closure(const Field* field, int side,
                              const std::vector<BnGenerator>& gens,
                              const Budgets& budgets) {
  for (const BnGenerator& g : gens)
    if (g.mat.rows() != side || g.mat.cols() != side)
      throw InvalidParams("algebra_closure: generator size mismatch");
  WitnessedSpan span(field, side);
  {
    WitnessCombo id_w;
    id_w.emplace(Word{}, field->one());
    span.insert(Mat::identity(field, side), std::move(id_w));
  }
  for (const BnGenerator& g : gens) {
    WitnessCombo w;
    w.emplace(Word{g.atom}, field->one());
    span.insert(g.mat, std::move(w));
  }
  for (int wave = 0;; ++wave) {
    if (wave >= budgets.max_closure_waves)
      throw SizeBudgetExceeded(wave, budgets.max_closure_waves);
    // snapshot: pairs (matrix, witness) stay valid combos even if the
    // builder rows get re-reduced by later insertions
    std::vector<Mat> basis = span.basis();
    std::vector<WitnessCombo> witnesses;
    witnesses.reserve(basis.size());
    for (int k = 0; k < span.dim(); ++k) witnesses.push_back(span.witness(k));

    const size_t products = basis.size() * gens.size();
    std::vector<Mat> cand(products);
    parallel_for(products, [&](size_t idx) {
      size_t b = idx / gens.size(), g = idx % gens.size();
      cand[idx] = gens[g].mat * basis[b];
    });
    bool grew = false;
    for (size_t idx = 0; idx < products; ++idx) {
      if (span.contains(cand[idx])) continue;
      size_t b = idx / gens.size(), g = idx % gens.size();
      WitnessCombo w;
      for (const auto& [word, coef] : witnesses[b]) {
        Word extended;
        extended.reserve(word.size() + 1);
        extended.push_back(gens[g].atom);
        extended.insert(extended.end(), word.begin(), word.end());
        w.emplace(std::move(extended), coef);
      }
      grew |= span.insert(cand[idx], std::move(w));
    }
    if (!grew) break;
  }
  return span;
}

PolarizedData product_data(const PolarizedData& data, int r) {
  if (r < 1) throw InvalidParams("product_data: r must be >= 1");
  const Field* f = data.field();
  Mat id_r = Mat::identity(f, r);
  Mat phi = id_r.kron(data.phi());
  std::vector<Mat> e_basis;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      Mat unit(f, r, r);
      unit.set(a, b, f->one());
      for (const Mat& e : data.e_basis()) e_basis.push_back(unit.kron(e));
    }
  std::vector<Mat> extra;
  for (const Mat& h : data.extra_generators()) extra.push_back(id_r.kron(h));
  return PolarizedData(data.field_ptr(), data.g() * r, std::move(phi),
                       std::move(e_basis), std::move(extra));
}

ThmCleReport verify_thm_cle(const PolarizedData& data, int n,
                            const Budgets& budgets) {
  ThmCleReport rep;
  rep.n = n;
  TensorSpace ts{data.m(), n};
  WitnessedSpan closure = algebra_closure(
      data.field(), static_cast<int>(ts.dim()), bn_generators(data, n, budgets),
      budgets);
  OperatorSpan closure_span = closure.to_operator_span();
  OperatorSpan cent = centralizer_basis(data, n, budgets.max_operator_dim);
  OperatorSpan diag = diagram_span(data, n, budgets.max_operator_dim);
  rep.dim_closure = closure_span.dim();
  rep.dim_centralizer = cent.dim();
  rep.dim_diagram = diag.dim();
  rep.closure_eq_centralizer = closure_span.equals(cent);
  rep.centralizer_eq_diagram = cent.equals(diag);
  rep.diagram_eq_closure = diag.equals(closure_span);
  rep.missing_components_suspected =
      !rep.centralizer_eq_diagram && cent.contains_span(diag);
  return rep;
}

WitnessedSpan bir_algebra(const PolarizedData& data, int i, int r,
                          const Budgets& budgets) {
  if (i < 1) throw InvalidParams("bir_algebra: i must be >= 1");
  PolarizedData pd = product_data(data, r);
  const Field* f = pd.field();
  const int m = pd.m();
  const std::int64_t wedge_dim = binomial(m, i);
  WitnessedSpan out(f, static_cast<int>(wedge_dim));
  if (wedge_dim == 0) return out;  // exterior power vanishes
  checked_power_dim(m, i, budgets);
  WitnessedSpan closure =
      algebra_closure(f, static_cast<int>(TensorSpace{m, i}.dim()),
                      bn_generators(pd, i, budgets), budgets);
  Mat anti = antisymmetrizer(f, i, m);
  const int dim = closure.dim();
  std::vector<Mat> compressed(dim);
  parallel_for(static_cast<size_t>(dim), [&](size_t k) {
    compressed[k] =
        compress_to_wedge(anti * closure.basis()[k] * anti, m, i);
  });
  for (int k = 0; k < dim; ++k) out.insert(compressed[k], closure.witness(k));
  return out;
}

CorPrincReport verify_cor_princ(const PolarizedData& data, int i, int r,
                                const Budgets& budgets) {
  CorPrincReport rep;
  rep.i = i;
  rep.r = r;
  WitnessedSpan bir = bir_algebra(data, i, r, budgets);
  OperatorSpan bir_span = bir.to_operator_span();
  rep.dim_bir = bir_span.dim();

  PolarizedData pd = product_data(data, r);
  const int m = pd.m();
  if (binomial(m, i) == 0) {
    rep.dim_compressed_centralizer = 0;
    rep.spans_equal = true;  // both algebras live on the zero space
    return rep;
  }
  OperatorSpan cent = centralizer_basis(pd, i, budgets.max_operator_dim);
  Mat anti = antisymmetrizer(pd.field(), i, m);
  std::vector<Mat> compressed(cent.dim());
  parallel_for(static_cast<size_t>(cent.dim()), [&](size_t k) {
    compressed[k] = compress_to_wedge(anti * cent.basis()[k] * anti, m, i);
  });
  OperatorSpan rhs = OperatorSpan::from_mats(
      pd.field(), static_cast<int>(binomial(m, i)), compressed);
  rep.dim_compressed_centralizer = rhs.dim();
  rep.spans_equal = bir_span.equals(rhs);
  return rep;
}

}  // namespace lefdec
