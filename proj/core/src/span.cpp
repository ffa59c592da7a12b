#include "lefdec/span.hpp"

namespace lefdec {

SparseVec flatten(const Mat& m) {
  SparseVec v;
  v.reserve(static_cast<size_t>(m.nnz()));
  const std::int64_t cols = m.cols();
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [c, val] : m.row(i))
      v.emplace_back(static_cast<std::int64_t>(i) * cols + c, val);
  return v;
}

Mat unflatten(const Field* field, int rows, int cols, const SparseVec& v) {
  Mat m(field, rows, cols);
  for (const auto& [idx, val] : v)
    m.set(static_cast<int>(idx / cols), static_cast<int>(idx % cols), val);
  return m;
}

SparseVec sparse_axpy(const SparseVec& r, const Scalar& c, const SparseVec& s) {
  SparseVec out;
  out.reserve(r.size() + s.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || s[j].first < r[i].first) {
      Scalar v = c * s[j].second;
      if (!v.is_zero()) out.emplace_back(s[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = r[i].second + c * s[j].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void sparse_scale(SparseVec& v, const Scalar& c) {
  for (auto& [idx, val] : v) val *= c;
}

OperatorSpan OperatorSpan::from_mats(const Field* field, int side,
                                     const std::vector<Mat>& mats) {
  OperatorSpan span(field, side);
  for (const Mat& m : mats) span.insert(m);
  return span;
}

bool OperatorSpan::insert(const Mat& m) {
  bool grew = builder_.insert(flatten(m));
  if (grew) rebuild_basis();
  return grew;
}

bool OperatorSpan::contains(const Mat& m) const {
  return builder_.contains(flatten(m));
}

bool OperatorSpan::contains_span(const OperatorSpan& other) const {
  for (const Mat& m : other.basis_)
    if (!contains(m)) return false;
  return true;
}

bool OperatorSpan::equals(const OperatorSpan& other) const {
  if (dim() != other.dim() || side_ != other.side_) return false;
  // canonical rref bases: equal subspaces have identical bases
  for (int i = 0; i < dim(); ++i)
    if (basis_[i] != other.basis_[i]) return false;
  return true;
}

std::optional<std::vector<Scalar>> OperatorSpan::coordinates(
    const Mat& m) const {
  return builder_.coordinates(flatten(m));
}

bool OperatorSpan::is_multiplicatively_closed() const {
  for (const Mat& a : basis_)
    for (const Mat& b : basis_)
      if (!contains(a * b)) return false;
  return true;
}

bool OperatorSpan::contains_identity() const {
  return contains(Mat::identity(field(), side_));
}

OperatorSpan OperatorSpan::union_with(const OperatorSpan& other) const {
  OperatorSpan out = *this;
  for (const Mat& m : other.basis_) out.insert(m);
  return out;
}

void OperatorSpan::rebuild_basis() {
  basis_.clear();
  basis_.reserve(builder_.rows().size());
  for (const auto& row : builder_.rows())
    basis_.push_back(unflatten(field(), side_, side_, row.v));
}

}  // namespace lefdec
