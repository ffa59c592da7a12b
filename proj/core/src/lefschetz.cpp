#include "lefdec/lefschetz.hpp"

#include <map>
#include <stdexcept>

#include "lefdec/errors.hpp"
#include "lefdec/parallel.hpp"
#include "lefdec/tensor.hpp"

namespace lefdec {

namespace {

/// vec(X) index for entry (a, b) of an m x m unknown, row-major.
inline int vec_idx(int m, int a, int b) { return a * m + b; }

}  // namespace

std::vector<Mat> lie_algebra_basis(const PolarizedData& data) {
  const Field* f = data.field();
  const int m = data.m();
  const int unknowns = m * m;
  const int blocks = static_cast<int>(data.e_basis().size()) + 1;
  Mat sys(f, blocks * unknowns, unknowns);
  int row = 0;
  // [X, e] = 0 for every e in E_basis
  for (const Mat& e : data.e_basis()) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j, ++row) {
        for (int a = 0; a < m; ++a) {
          Scalar eaj = e.get(a, j);
          if (!eaj.is_zero()) sys.add_to(row, vec_idx(m, i, a), eaj);
          Scalar eia = e.get(i, a);
          if (!eia.is_zero()) sys.add_to(row, vec_idx(m, a, j), -eia);
        }
      }
  }
  // X^T phi + phi X = 0
  const Mat& phi = data.phi();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j, ++row) {
      for (int a = 0; a < m; ++a) {
        Scalar paj = phi.get(a, j);
        if (!paj.is_zero()) sys.add_to(row, vec_idx(m, a, i), paj);
        Scalar pia = phi.get(i, a);
        if (!pia.is_zero()) sys.add_to(row, vec_idx(m, a, j), pia);
      }
    }
  std::vector<Mat> basis;
  for (const auto& v : kernel_basis(sys)) {
    Mat x(f, m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (!v[vec_idx(m, a, b)].is_zero()) x.set(a, b, v[vec_idx(m, a, b)]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Mat> diagonal_lie_elements(const PolarizedData& data) {
  const Field* f = data.field();
  const int m = data.m();
  Mat sys(f, (static_cast<int>(data.e_basis().size()) + 1) * m * m, m);
  int row = 0;
  for (const Mat& e : data.e_basis())
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j, ++row) {
        Scalar eij = e.get(i, j);
        if (eij.is_zero()) continue;
        sys.add_to(row, i, eij);
        sys.add_to(row, j, -eij);
      }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j, ++row) {
      Scalar pij = data.phi().get(i, j);
      if (pij.is_zero()) continue;
      sys.add_to(row, i, pij);
      sys.add_to(row, j, pij);
    }
  std::vector<Mat> out;
  for (const auto& v : kernel_basis(sys)) {
    Mat x(f, m, m);
    for (int i = 0; i < m; ++i)
      if (!v[i].is_zero()) x.set(i, i, v[i]);
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

/// Weight key of a tensor basis index under the diagonal constraints:
/// eigenvalues of each diagonal action, serialized for exact grouping.
std::string weight_key(const std::vector<Mat>& diag_commutators,
                       const std::vector<Mat>& diag_conjugators,
                       const TensorSpace& ts, std::int64_t index) {
  std::vector<int> tuple = ts.decode(index);
  std::string key;
  for (const Mat& d : diag_commutators) {
    Scalar acc;
    for (int k : tuple) acc += d.get(k, k);
    key += acc.to_string();
    key += '|';
  }
  for (const Mat& h : diag_conjugators) {
    Scalar acc = h.field()->one();
    for (int k : tuple) acc *= h.get(k, k);
    key += acc.to_string();
    key += '|';
  }
  return key;
}

}  // namespace

OperatorSpan centralizer_basis(const PolarizedData& data, int n,
                               std::int64_t max_operator_dim) {
  if (n < 1) throw InvalidParams("centralizer_basis: n must be >= 1");
  const Field* f = data.field();
  const int m = data.m();
  std::int64_t dim = 1;
  for (int k = 0; k < n; ++k) {
    dim *= m;
    if (dim > max_operator_dim) throw SizeBudgetExceeded(dim, max_operator_dim);
  }
  const int N = static_cast<int>(dim);
  const TensorSpace ts{m, n};

  std::vector<Mat> lie = lie_algebra_basis(data);
  std::vector<Mat> diag = diagonal_lie_elements(data);

  // Constraint operators A with [A, F] = 0, diagonal ones handled as a
  // support filter up front.
  std::vector<Mat> diag_conj;
  std::vector<Mat> general;
  for (const Mat& x : lie)
    if (!x.is_diagonal()) general.push_back(diagonal_action(x, n));
  for (const Mat& h : data.extra_generators()) {
    Mat hp = h;
    for (int k = 1; k < n; ++k) hp = hp.kron(h);
    if (h.is_diagonal())
      diag_conj.push_back(std::move(hp));
    else
      general.push_back(std::move(hp));
  }

  // Phase 1: group basis indices by weight key; the kernel of the diagonal
  // constraints is spanned by matrix units inside the groups.
  std::vector<Mat> kernel;
  {
    std::map<std::string, std::vector<std::int64_t>> groups;
    std::vector<std::string> keys(N);
    parallel_for(static_cast<size_t>(N), [&](size_t a) {
      keys[a] = weight_key(diag, diag_conj, ts, static_cast<std::int64_t>(a));
    });
    for (std::int64_t a = 0; a < N; ++a) groups[keys[a]].push_back(a);
    std::int64_t support = 0;
    for (const auto& [key, members] : groups)
      support += static_cast<std::int64_t>(members.size()) * members.size();
    if (support > 8'000'000) throw SizeBudgetExceeded(support, 8'000'000);
    for (const auto& [key, members] : groups)
      for (std::int64_t a : members)
        for (std::int64_t b : members) {
          Mat unit(f, N, N);
          unit.set(static_cast<int>(a), static_cast<int>(b), f->one());
          kernel.push_back(std::move(unit));
        }
  }

  // Phase 2: intersect with each remaining constraint block.
  for (const Mat& A : general) {
    if (kernel.empty()) break;
    const int k = static_cast<int>(kernel.size());
    std::vector<Mat> comms(k);
    parallel_for(static_cast<size_t>(k), [&](size_t j) {
      comms[j] = commutator(A, kernel[j]);
    });
    // transpose to rows over matrix positions
    std::map<std::int64_t, SparseRow> rows;
    for (int j = 0; j < k; ++j)
      for (int r = 0; r < N; ++r)
        for (const auto& [c, v] : comms[j].row(r))
          rows[static_cast<std::int64_t>(r) * N + c].emplace_back(j, v);
    Mat constraint(f, static_cast<int>(rows.size()), k);
    {
      int r = 0;
      for (auto& [pos, row] : rows) {
        for (auto& [j, v] : row) constraint.add_to(r, j, v);
        ++r;
      }
    }
    std::vector<std::vector<Scalar>> coeffs = kernel_basis(constraint);
    std::vector<Mat> next(coeffs.size());
    parallel_for(coeffs.size(), [&](size_t t) {
      Mat acc(f, N, N);
      for (int j = 0; j < k; ++j)
        if (!coeffs[t][j].is_zero()) acc = acc + kernel[j] * coeffs[t][j];
      next[t] = std::move(acc);
    });
    kernel = std::move(next);
  }

  OperatorSpan span = OperatorSpan::from_mats(f, N, kernel);
  if (!span.contains_identity())
    throw std::logic_error("centralizer does not contain the identity");
  if (!span.is_multiplicatively_closed())
    throw std::logic_error("centralizer is not closed under products");
  return span;
}

}  // namespace lefdec
