#include "lefdec/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "lefdec/errors.hpp"

namespace lefdec {

Mat::Mat(const Field* field, int rows, int cols)
    : rows_(rows), cols_(cols), fld_(field), data_(rows) {
  assert(rows >= 0 && cols >= 0);
}

Mat Mat::identity(const Field* field, int n) {
  Mat m(field, n, n);
  for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, field->one());
  return m;
}

Mat Mat::from_rows(const Field* field,
                   const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw ValidationError("matrix_shape", "ragged row lengths");
    for (int j = 0; j < c; ++j)
      if (!lefdec::is_zero(rows[i][j]))
        m.data_[i].emplace_back(j, field->from_rational(rows[i][j]));
  }
  return m;
}

Mat Mat::from_scalar_rows(const Field* field,
                          const std::vector<std::vector<Scalar>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m(field, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (!rows[i][j].is_zero()) m.data_[i].emplace_back(j, rows[i][j]);
  return m;
}

std::int64_t Mat::nnz() const {
  std::int64_t n = 0;
  for (const auto& r : data_) n += static_cast<std::int64_t>(r.size());
  return n;
}

Scalar Mat::get(int i, int j) const {
  const SparseRow& r = data_[i];
  auto it = std::lower_bound(
      r.begin(), r.end(), j,
      [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
  if (it != r.end() && it->first == j) return it->second;
  return Scalar();
}

void Mat::set(int i, int j, Scalar v) {
  SparseRow& r = data_[i];
  auto it = std::lower_bound(
      r.begin(), r.end(), j,
      [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
  if (it != r.end() && it->first == j) {
    if (v.is_zero())
      r.erase(it);
    else
      it->second = std::move(v);
  } else if (!v.is_zero()) {
    r.insert(it, {j, std::move(v)});
  }
}

void Mat::add_to(int i, int j, const Scalar& v) {
  if (v.is_zero()) return;
  SparseRow& r = data_[i];
  auto it = std::lower_bound(
      r.begin(), r.end(), j,
      [](const std::pair<int, Scalar>& e, int col) { return e.first < col; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, {j, v});
  }
}

namespace {

SparseRow merge_rows(const SparseRow& a, const SparseRow& b,
                     const Scalar* b_factor) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = b_factor ? b[j].second * *b_factor : b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = a[i].second +
                 (b_factor ? b[j].second * *b_factor : b[j].second);
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Mat Mat::operator+(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat m(fld_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    m.data_[i] = merge_rows(data_[i], o.data_[i], nullptr);
  return m;
}

Mat Mat::operator-(const Mat& o) const { return *this + -o; }

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& r : m.data_)
    for (auto& [c, v] : r) v = -v;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols_ == o.rows_);
  Mat m(fld_, rows_, o.cols_);
  // row-sparse product with an ordered accumulator per output row
  for (int i = 0; i < rows_; ++i) {
    std::map<int, Scalar> acc;
    for (const auto& [k, a] : data_[i]) {
      for (const auto& [j, b] : o.data_[k]) {
        auto [it, fresh] = acc.try_emplace(j, Scalar());
        it->second += a * b;
      }
    }
    SparseRow& out = m.data_[i];
    out.reserve(acc.size());
    for (auto& [j, v] : acc)
      if (!v.is_zero()) out.emplace_back(j, std::move(v));
  }
  return m;
}

Mat Mat::operator*(const Scalar& s) const {
  Mat m(fld_, rows_, cols_);
  if (s.is_zero()) return m;
  for (int i = 0; i < rows_; ++i) {
    m.data_[i].reserve(data_[i].size());
    for (const auto& [c, v] : data_[i]) {
      Scalar w = v * s;
      if (!w.is_zero()) m.data_[i].emplace_back(c, std::move(w));
    }
  }
  return m;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    if (data_[i].size() != o.data_[i].size()) return false;
    for (size_t k = 0; k < data_[i].size(); ++k)
      if (data_[i][k].first != o.data_[i][k].first ||
          !(data_[i][k].second == o.data_[i][k].second))
        return false;
  }
  return true;
}

bool Mat::is_zero() const {
  for (const auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    if (data_[i].size() != 1) return false;
    if (data_[i][0].first != i || !(data_[i][0].second == fld_->one()))
      return false;
  }
  return true;
}

bool Mat::is_diagonal() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i])
      if (c != i) return false;
  return true;
}

bool Mat::is_alternating() const {
  if (rows_ != cols_) return false;
  return transpose() == -*this;
}

Mat Mat::transpose() const {
  Mat m(fld_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [c, v] : data_[i]) m.data_[c].emplace_back(i, v);
  return m;  // columns visited in ascending i, so rows stay sorted
}

Scalar Mat::trace() const {
  Scalar t = fld_ ? fld_->zero() : Scalar();
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += get(i, i);
  return t;
}

Mat Mat::kron(const Mat& o) const {
  Mat m(fld_, rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int p = 0; p < o.rows_; ++p) {
      SparseRow& out = m.data_[i * o.rows_ + p];
      for (const auto& [j, a] : data_[i])
        for (const auto& [q, b] : o.data_[p]) {
          Scalar v = a * b;
          if (!v.is_zero()) out.emplace_back(j * o.cols_ + q, std::move(v));
        }
    }
  return m;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw NotInvertible();
  const int n = rows_;
  // rref of [M | I]
  Mat aug(fld_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    aug.data_[i] = data_[i];
    aug.data_[i].emplace_back(n + i, fld_->one());
  }
  RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivot_cols[n - 1] >= n)) throw NotInvertible();
  Mat inv(fld_, n, n);
  for (int i = 0; i < n; ++i)
    for (const auto& [c, v] : r.reduced.row(i))
      if (c >= n) inv.data_[i].emplace_back(c - n, v);
  return inv;
}

Mat Mat::pow(long e) const {
  assert(is_square() && e >= 0);
  Mat acc = Mat::identity(fld_, rows_);
  Mat base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
  assert(static_cast<int>(v.size()) == cols_);
  std::vector<Scalar> out(rows_, fld_->zero());
  for (int i = 0; i < rows_; ++i)
    for (const auto& [c, a] : data_[i]) out[i] += a * v[c];
  return out;
}

std::string Mat::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += i ? "\n[" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      Scalar v = get(i, j);
      s += v.is_null_zero() ? "0" : v.to_string();
    }
    s += "]";
  }
  return s;
}

RrefResult rref(const Mat& m) {
  const Field* f = m.field();
  std::vector<SparseRow> rows;  // reduced rows, pivot strictly ascending
  std::vector<int> pivots;
  for (int i = 0; i < m.rows(); ++i) {
    SparseRow v = m.row(i);
    // clear every coordinate of v sitting at an existing pivot column
    for (size_t idx = 0, k = 0; idx < v.size() && k < rows.size();) {
      const int col = v[idx].first;
      while (k < rows.size() && pivots[k] < col) ++k;
      if (k == rows.size()) break;
      if (pivots[k] != col) {
        ++idx;
        continue;
      }
      Scalar factor = -v[idx].second;
      v = merge_rows(v, rows[k], &factor);
      // prefix before col untouched, entry at col gone: idx stays put
    }
    if (v.empty()) continue;
    // normalize pivot to 1
    Scalar inv = v[0].second.inverse();
    for (auto& [c, val] : v) val *= inv;
    int piv = v[0].first;
    // back-eliminate the new pivot from existing rows
    for (size_t k = 0; k < rows.size(); ++k) {
      Scalar coef = Scalar();
      for (const auto& [c, val] : rows[k]) {
        if (c == piv) {
          coef = val;
          break;
        }
        if (c > piv) break;
      }
      if (!coef.is_zero()) {
        Scalar factor = -coef;
        rows[k] = merge_rows(rows[k], v, &factor);
      }
    }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), piv);
    size_t idx = static_cast<size_t>(pos - pivots.begin());
    pivots.insert(pos, piv);
    rows.insert(rows.begin() + idx, std::move(v));
  }
  RrefResult out;
  out.rank = static_cast<int>(rows.size());
  out.pivot_cols = pivots;
  out.reduced = Mat(f, out.rank, m.cols());
  for (int i = 0; i < out.rank; ++i) {
    Mat& red = out.reduced;
    for (auto& e : rows[i]) red.add_to(i, e.first, e.second);
  }
  return out;
}

std::vector<std::vector<Scalar>> kernel_basis(const Mat& m) {
  const Field* f = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> v(m.cols(), f->zero());
    v[j] = f->one();
    for (int i = 0; i < r.rank; ++i) {
      Scalar coef = r.reduced.get(i, j);
      if (!coef.is_zero()) v[r.pivot_cols[i]] = -coef;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_of(const Mat& m) { return rref(m).rank; }

namespace {

/// Minimal polynomial of a single Krylov seed via augmented elimination.
Poly seed_min_poly(const Mat& m, int seed) {
  const Field* f = m.field();
  const int n = m.rows();
  // Augmented rows [krylov_vector | power-index tail]; when the vector part
  // reduces to zero the tail holds the dependency, i.e. the annihilator.
  std::vector<std::vector<Scalar>> reduced;  // rows with pivot info
  std::vector<int> pivots;                   // pivot col per reduced row
  std::vector<Scalar> v(n, f->zero());
  v[seed] = f->one();
  for (int power = 0;; ++power) {
    std::vector<Scalar> aug(n + power + 1, f->zero());
    for (int i = 0; i < n; ++i) aug[i] = v[i];
    aug[n + power] = f->one();
    // eliminate with existing rows
    for (size_t k = 0; k < reduced.size(); ++k) {
      Scalar c = aug[pivots[k]];
      if (c.is_zero()) continue;
      const auto& row = reduced[k];
      for (size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) aug[j] -= c * row[j];
    }
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (!aug[j].is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) {
      std::vector<Scalar> coeffs(aug.begin() + n, aug.end());
      return Poly(f, std::move(coeffs)).make_monic();
    }
    Scalar inv = aug[piv].inverse();
    for (auto& x : aug) x *= inv;
    aug.resize(n + power + 1, f->zero());
    reduced.push_back(std::move(aug));
    pivots.push_back(piv);
    v = m.apply(v);
  }
}

}  // namespace

Poly min_poly_of(const Mat& m) {
  if (!m.is_square())
    throw ValidationError("min_poly_of", "matrix must be square");
  const Field* f = m.field();
  if (m.rows() == 0) return Poly::from_rationals(f, {Rational(1)});
  Poly p(f);
  for (int seed = 0; seed < m.rows(); ++seed) {
    // skip seeds already annihilated by the current candidate
    if (!p.is_zero()) {
      std::vector<Scalar> v(m.rows(), f->zero());
      v[seed] = f->one();
      std::vector<Scalar> acc(m.rows(), f->zero());
      for (int k = p.degree(); k >= 0; --k) {
        acc = m.apply(acc);
        const Scalar c = p.coeff(k);
        if (!c.is_zero())
          for (int i = 0; i < m.rows(); ++i) acc[i] += c * v[i];
      }
      bool zero = true;
      for (const auto& x : acc)
        if (!x.is_zero()) {
          zero = false;
          break;
        }
      if (zero) continue;
    }
    Poly ps = seed_min_poly(m, seed);
    p = p.is_zero() ? ps : poly_lcm(p, ps);
    if (p.degree() == m.rows()) break;  // cannot grow further
  }
  return p;
}

}  // namespace lefdec
