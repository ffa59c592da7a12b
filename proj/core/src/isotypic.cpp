#include "lefdec/isotypic.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "lefdec/diagrams.hpp"
#include "lefdec/errors.hpp"
#include "lefdec/parallel.hpp"

namespace lefdec {

namespace {

bool mat_lex_less(const Mat& a, const Mat& b) {
  SparseVec fa = flatten(a), fb = flatten(b);
  for (size_t k = 0; k < std::min(fa.size(), fb.size()); ++k) {
    if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
    int c = scalar_compare(fa[k].second, fb[k].second);
    if (c != 0) return c < 0;
  }
  return fa.size() < fb.size();
}

/// Small deterministic integer stream; avoids std distributions so the
/// sequence is identical across standard libraries.
class CoeffStream {
 public:
  explicit CoeffStream(unsigned long long seed) : rng_(seed) {}
  long next() { return static_cast<long>(rng_() % 19) - 9; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

OperatorSpan center_basis(const OperatorSpan& alg) {
  const Field* f = alg.field();
  const int side = alg.side();
  const int d = alg.dim();
  OperatorSpan out(f, side);
  if (d == 0) return out;
  // unknowns: coordinates c_j of z = sum c_j B_j; constraints [z, B_k] = 0
  std::map<std::int64_t, SparseRow> rows;
  for (int k = 0; k < d; ++k) {
    std::vector<Mat> comms(d);
    parallel_for(static_cast<size_t>(d), [&](size_t j) {
      comms[j] = commutator(alg.basis()[j], alg.basis()[k]);
    });
    const std::int64_t block = static_cast<std::int64_t>(k) * side * side;
    for (int j = 0; j < d; ++j)
      for (int r = 0; r < side; ++r)
        for (const auto& [c, v] : comms[j].row(r))
          rows[block + static_cast<std::int64_t>(r) * side + c].emplace_back(j,
                                                                             v);
  }
  Mat constraint(f, static_cast<int>(rows.size()), d);
  {
    int r = 0;
    for (auto& [pos, row] : rows) {
      for (auto& [j, v] : row) constraint.add_to(r, j, v);
      ++r;
    }
  }
  for (const auto& coeffs : kernel_basis(constraint)) {
    Mat z(f, side, side);
    for (int j = 0; j < d; ++j)
      if (!coeffs[j].is_zero()) z = z + alg.basis()[j] * coeffs[j];
    out.insert(z);
  }
  return out;
}

std::vector<Mat> primitive_idempotents(const OperatorSpan& alg,
                                       unsigned long long seed, int retries) {
  const Field* f = alg.field();
  OperatorSpan center = center_basis(alg);
  const int k = center.dim();
  if (k == 0) return {};
  CoeffStream stream(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    Mat z(f, alg.side(), alg.side());
    for (int j = 0; j < k; ++j)
      z = z + center.basis()[j] * f->from_int(stream.next());
    Poly p = min_poly_of(z);
    if (p.degree() != k || !is_squarefree(p)) continue;  // non-generic draw
    RootSplit rs = roots_in_field(p);
    if (!rs.full_split())
      throw SplittingFieldRequired(rs.nonsplit->to_string());
    std::vector<Mat> idems(k);
    parallel_for(static_cast<size_t>(k), [&](size_t t) {
      Mat acc = Mat::identity(f, alg.side());
      for (int j = 0; j < k; ++j) {
        if (j == static_cast<int>(t)) continue;
        Scalar denom = rs.roots[t] - rs.roots[j];
        acc = (acc * (z - Mat::identity(f, alg.side()) * rs.roots[j])) *
              denom.inverse();
      }
      idems[t] = std::move(acc);
    });
    std::sort(idems.begin(), idems.end(), [](const Mat& a, const Mat& b) {
      int ra = rank_of(a), rb = rank_of(b);
      if (ra != rb) return ra < rb;
      return mat_lex_less(a, b);
    });
    return idems;
  }
  throw CenterNotSeparated(retries);
}

namespace {

/// Column-space basis of p as a (side x rank) matrix plus the coordinate
/// selector rows (pivot positions), from the rref of p^T.
struct ImageBasis {
  Mat basis;                // side x rank
  std::vector<int> pivots;  // coordinate extractor: coords_i = w[pivots[i]]
};

ImageBasis image_basis(const Mat& p) {
  RrefResult r = rref(p.transpose());
  ImageBasis out;
  out.basis = r.reduced.transpose();
  out.pivots = r.pivot_cols;
  return out;
}

/// Coordinates of the columns of (side x j) matrix w in an image basis.
Mat image_coords(const ImageBasis& ib, const Mat& w) {
  Mat out(w.field(), static_cast<int>(ib.pivots.size()), w.cols());
  for (size_t i = 0; i < ib.pivots.size(); ++i)
    for (const auto& [c, v] : w.row(ib.pivots[i]))
      out.set(static_cast<int>(i), c, v);
  return out;
}

}  // namespace

std::optional<Intertwiner> intertwiner(const OperatorSpan& alg, const Mat& p,
                                       const Mat& q, unsigned long long seed,
                                       int retries) {
  const Field* f = alg.field();
  if (!alg.contains(p) || !alg.contains(q) || p * p != p || q * q != q)
    throw InvalidParams("intertwiner: arguments must be idempotents in the span");
  const int rank_p = rank_of(p);
  if (rank_p != rank_of(q)) return std::nullopt;
  if (rank_p == 0) return Intertwiner{p, p};

  ImageBasis bp = image_basis(p), bq = image_basis(q);
  auto attempt = [&](const Mat& x) -> std::optional<Intertwiner> {
    Mat u = q * x * p;
    Mat coords = image_coords(bq, u * bp.basis);  // rank x rank
    Mat inv;
    try {
      inv = coords.inverse();
    } catch (const NotInvertible&) {
      return std::nullopt;
    }
    Mat v = bp.basis * inv * image_coords(bq, q);
    if (v * u * p != p || u * v * q != q) return std::nullopt;
    return Intertwiner{std::move(u), std::move(v)};
  };
  for (const Mat& b : alg.basis())
    if (auto found = attempt(b)) return found;
  CoeffStream stream(seed);
  for (int t = 0; t < retries; ++t) {
    Mat x(f, alg.side(), alg.side());
    for (const Mat& b : alg.basis()) x = x + b * f->from_int(stream.next());
    if (auto found = attempt(x)) return found;
  }
  return std::nullopt;
}

std::vector<Mat> fine_split(const OperatorSpan& alg, const Mat& e,
                            unsigned long long seed, int retries) {
  const Field* f = alg.field();
  // corner algebra e * alg * e, with unit e
  std::vector<Mat> corner_gens;
  for (const Mat& b : alg.basis()) corner_gens.push_back(e * b * e);
  OperatorSpan corner = OperatorSpan::from_mats(f, alg.side(), corner_gens);
  if (corner.dim() <= 1) return {e};

  ImageBasis ib = image_basis(e);
  // Candidate elements: the structured corner basis first (products of
  // span elements tend to be singular, giving roots in the base field),
  // then seeded random combinations as a fallback.
  std::vector<Mat> candidates = corner.basis();
  CoeffStream stream(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    Mat t(f, alg.side(), alg.side());
    for (const Mat& b : corner.basis()) t = t + b * f->from_int(stream.next());
    candidates.push_back(std::move(t));
  }

  std::optional<Poly> obstruction;
  for (const Mat& t : candidates) {
    Mat restricted = image_coords(ib, t * ib.basis);
    Poly p = min_poly_of(restricted);
    if (p.degree() < 2) continue;  // scalar on the corner: no split
    // corners of a semisimple algebra are semisimple, so p is squarefree
    if (!is_squarefree(p)) continue;
    RootSplit rs = roots_in_field(p);
    if (rs.roots.empty()) {
      if (!obstruction && rs.nonsplit) obstruction = rs.nonsplit;
      continue;
    }
    // peel one eigenvalue: the CRT idempotent of the factor (y - lambda),
    // evaluated in the corner (constant term times the corner unit e)
    const Scalar& lambda = rs.roots.front();
    Poly q = p.deflate(lambda);
    Mat ft(f, alg.side(), alg.side());
    Mat power = e;
    for (int k = 0; k <= q.degree(); ++k) {
      ft = ft + power * q.coeff(k);
      power = power * t;
    }
    ft = ft * q.eval(lambda).inverse();
    if (ft * ft != ft || ft.is_zero() || ft == e) continue;
    std::vector<Mat> out;
    for (const Mat& part : {ft, e - ft}) {
      auto finer = fine_split(alg, part, seed + 1, retries);
      out.insert(out.end(), finer.begin(), finer.end());
    }
    std::sort(out.begin(), out.end(), mat_lex_less);
    return out;
  }
  if (obstruction) throw SplittingFieldRequired(obstruction->to_string());
  return {e};  // no further refinement found within the retry budget
}

DecompositionReport decompose(const PolarizedData& data, int i, int r,
                              unsigned long long seed, const Budgets& budgets,
                              bool fine_split_components) {
  DecompositionReport rep;
  rep.i = i;
  rep.r = r;
  rep.seed = seed;
  PolarizedData pd = product_data(data, r);
  const Field* f = pd.field();
  const int m = pd.m();
  rep.wedge_dim = binomial(m, i);
  rep.cor_princ = verify_cor_princ(data, i, r, budgets);
  if (rep.wedge_dim == 0) {
    // the exterior power vanishes: empty report on a zero-dimensional space
    rep.certificates = DecompositionCertificates{true, true, true,
                                                 true,  true, true};
    return rep;
  }
  WitnessedSpan bir = bir_algebra(data, i, r, budgets);
  OperatorSpan alg = bir.to_operator_span();
  std::vector<Mat> idems =
      primitive_idempotents(alg, seed, budgets.idempotent_retries);

  // equivariance data on the wedge space
  std::vector<Mat> actions;
  for (const Mat& x : lie_algebra_basis(pd))
    actions.push_back(compress_to_wedge(diagonal_action(x, i), m, i));
  std::vector<Mat> group_actions;
  for (const Mat& h : pd.extra_generators()) {
    Mat hp = h;
    for (int k = 1; k < i; ++k) hp = hp.kron(h);
    group_actions.push_back(compress_to_wedge(hp, m, i));
  }

  DecompositionCertificates cert;
  cert.idempotent = cert.orthogonal = cert.equivariant = cert.witnesses_exact =
      true;
  const int side = static_cast<int>(rep.wedge_dim);
  Mat total(f, side, side);
  std::int64_t rank_sum = 0;
  for (const Mat& e : idems) {
    DecompositionComponent comp;
    comp.idempotent = e;
    comp.rank = rank_of(e);
    rank_sum += comp.rank;
    total = total + e;
    cert.idempotent &= (e * e == e);
    auto expressed = bir.express(e);
    if (!expressed) {
      cert.witnesses_exact = false;
    } else {
      comp.witness = expressed->second;
      Mat re = eval_combo(comp.witness, pd, i);
      Mat anti = antisymmetrizer(f, i, m);
      cert.witnesses_exact &= (compress_to_wedge(anti * re * anti, m, i) == e);
    }
    bool trivial_action = true;
    for (const Mat& a : actions) {
      cert.equivariant &= (a * e == e * a);
      trivial_action &= (a * e).is_zero();
    }
    for (const Mat& hc : group_actions) {
      cert.equivariant &= (hc * e == e * hc);
      trivial_action &= (hc * e == e);
    }
    if (trivial_action && i % 2 == 0) comp.twist = -i / 2;
    rep.components.push_back(std::move(comp));
  }
  for (size_t a = 0; a < idems.size(); ++a)
    for (size_t b = 0; b < idems.size(); ++b)
      if (a != b) cert.orthogonal &= (idems[a] * idems[b]).is_zero();
  cert.complete = (total == Mat::identity(f, side));
  cert.rank_sum_matches = (rank_sum == rep.wedge_dim);
  rep.certificates = cert;

  if (fine_split_components)
    for (const DecompositionComponent& comp : rep.components)
      rep.fine_components.push_back(
          fine_split(alg, comp.idempotent, seed, budgets.idempotent_retries));
  return rep;
}

}  // namespace lefdec
