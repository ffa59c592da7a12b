#include "lefdec/tensor.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "lefdec/errors.hpp"

namespace lefdec {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Perm Perm::transposition(int n, int k) { return swap(n, k, k + 1); }

Perm Perm::swap(int n, int a, int b) {
  Perm p = identity(n);
  std::swap(p.img[a], p.img[b]);
  return p;
}

bool Perm::is_identity() const {
  for (int k = 0; k < size(); ++k)
    if (img[k] != k) return false;
  return true;
}

Perm Perm::compose(const Perm& first) const {
  assert(size() == first.size());
  Perm p;
  p.img.resize(size());
  for (int k = 0; k < size(); ++k) p.img[k] = img[first.img[k]];
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.img.resize(size());
  for (int k = 0; k < size(); ++k) p.img[img[k]] = k;
  return p;
}

int Perm::sign() const {
  std::vector<bool> seen(size(), false);
  int sign = 1;
  for (int k = 0; k < size(); ++k) {
    if (seen[k]) continue;
    int len = 0, j = k;
    while (!seen[j]) {
      seen[j] = true;
      j = img[j];
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<bool> seen(size(), false);
  std::vector<std::vector<int>> out;
  for (int k = 0; k < size(); ++k) {
    if (seen[k] || img[k] == k) {
      seen[k] = true;
      continue;
    }
    std::vector<int> cyc;
    int j = k;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = img[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm{line});
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::int64_t TensorSpace::dim() const {
  std::int64_t d = 1;
  for (int k = 0; k < power; ++k) d *= base_dim;
  return d;
}

std::int64_t TensorSpace::encode(const std::vector<int>& tuple) const {
  assert(static_cast<int>(tuple.size()) == power);
  std::int64_t idx = 0;
  for (int k = 0; k < power; ++k) {
    assert(tuple[k] >= 0 && tuple[k] < base_dim);
    idx = idx * base_dim + tuple[k];
  }
  return idx;
}

std::vector<int> TensorSpace::decode(std::int64_t index) const {
  std::vector<int> tuple(power);
  for (int k = power - 1; k >= 0; --k) {
    tuple[k] = static_cast<int>(index % base_dim);
    index /= base_dim;
  }
  return tuple;
}

Mat factor_embed(const Mat& m, int pos, int n) {
  if (!m.is_square())
    throw InvalidParams("factor_embed: matrix must be square");
  if (pos < 1 || pos > n)
    throw InvalidParams("factor_embed: position " + std::to_string(pos) +
                        " out of range 1.." + std::to_string(n));
  const Field* f = m.field();
  std::int64_t left = 1, right = 1;
  for (int k = 1; k < pos; ++k) left *= m.rows();
  for (int k = pos; k < n; ++k) right *= m.rows();
  Mat id_left = Mat::identity(f, static_cast<int>(left));
  Mat id_right = Mat::identity(f, static_cast<int>(right));
  return id_left.kron(m.kron(id_right));
}

Mat signed_perm(const Field* field, const Perm& sigma, int base_dim) {
  const int n = sigma.size();
  TensorSpace ts{base_dim, n};
  const std::int64_t dim = ts.dim();
  Scalar sgn = field->from_int(sigma.sign());
  Mat out(field, static_cast<int>(dim), static_cast<int>(dim));
  std::vector<int> image(n);
  for (std::int64_t col = 0; col < dim; ++col) {
    std::vector<int> t = ts.decode(col);
    for (int k = 0; k < n; ++k) image[sigma.img[k]] = t[k];
    out.set(static_cast<int>(ts.encode(image)), static_cast<int>(col), sgn);
  }
  return out;
}

Mat diagonal_action(const Mat& x, int n) {
  Mat acc = factor_embed(x, 1, n);
  for (int pos = 2; pos <= n; ++pos) acc = acc + factor_embed(x, pos, n);
  return acc;
}

namespace {

void check_pairing_input(const Mat& phi) {
  if (!phi.is_square() || !phi.is_alternating()) throw NotAlternating();
  if (phi.rows() % 2 != 0) throw NotInvertible();  // odd alternating: singular
}

}  // namespace

Mat pairing_pi(const Mat& phi) {
  check_pairing_input(phi);
  const int m = phi.rows();
  Mat pi(phi.field(), 1, m * m);
  for (int i = 0; i < m; ++i)
    for (const auto& [j, v] : phi.row(i)) pi.set(0, i * m + j, v);
  return pi;
}

Mat copairing_iota(const Mat& phi) {
  check_pairing_input(phi);
  const int m = phi.rows();
  Mat inv = phi.inverse();  // throws NotInvertible when singular
  Mat iota(phi.field(), m * m, 1);
  for (int j = 0; j < m; ++j)
    for (const auto& [i, v] : inv.row(j)) iota.set(i * m + j, 0, v);
  return iota;
}

Mat projector_P(const Mat& phi) {
  const int m = phi.rows();
  Mat iota = copairing_iota(phi);
  Mat pi = pairing_pi(phi);
  return (iota * pi) * phi.field()->from_rational(Rational(1, m));
}

Mat antisymmetrizer(const Field* field, int n, int base_dim) {
  TensorSpace ts{base_dim, n};
  const std::int64_t dim = ts.dim();
  Mat acc(field, static_cast<int>(dim), static_cast<int>(dim));
  Rational fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  for (const Perm& s : all_perms(n))
    acc = acc + signed_perm(field, s, base_dim);
  return acc * field->from_rational(Rational(1) / fact);
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

std::vector<std::vector<int>> wedge_tuples(int base_dim, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > base_dim) return out;
  std::vector<int> t(k);
  std::iota(t.begin(), t.end(), 0);
  for (;;) {
    out.push_back(t);
    int pos = k - 1;
    while (pos >= 0 && t[pos] == base_dim - k + pos) --pos;
    if (pos < 0) break;
    ++t[pos];
    for (int j = pos + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

Mat wedge_injection(const Field* field, int base_dim, int k) {
  TensorSpace ts{base_dim, k};
  auto tuples = wedge_tuples(base_dim, k);
  Rational fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  Mat J(field, static_cast<int>(ts.dim()), static_cast<int>(tuples.size()));
  std::vector<int> image(k);
  for (size_t col = 0; col < tuples.size(); ++col) {
    for (const Perm& s : all_perms(k)) {
      for (int p = 0; p < k; ++p) image[s.img[p]] = tuples[col][p];
      J.add_to(static_cast<int>(ts.encode(image)), static_cast<int>(col),
               field->from_rational(Rational(s.sign()) / fact));
    }
  }
  return J;
}

Mat wedge_projection(const Field* field, int base_dim, int k) {
  TensorSpace ts{base_dim, k};
  auto tuples = wedge_tuples(base_dim, k);
  Mat Q(field, static_cast<int>(tuples.size()), static_cast<int>(ts.dim()));
  // map each distinct-entry tensor index to (sign, sorted tuple)
  const std::int64_t dim = ts.dim();
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    std::vector<int> t = ts.decode(idx);
    std::vector<int> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      continue;  // repeated factor: killed by the projection
    // sign of the permutation rearranging sorted into t
    Perm rho;
    rho.img.resize(k);
    std::vector<bool> used(k, false);
    for (int p = 0; p < k; ++p) {
      for (int q = 0; q < k; ++q) {
        if (!used[q] && sorted[p] == t[q]) {
          rho.img[p] = q;
          used[q] = true;
          break;
        }
      }
    }
    auto row = static_cast<int>(
        std::lower_bound(tuples.begin(), tuples.end(), sorted) -
        tuples.begin());
    Q.set(row, static_cast<int>(idx), field->from_int(rho.sign()));
  }
  return Q;
}

Mat compress_to_wedge(const Mat& t, int base_dim, int k) {
  const Field* f = t.field();
  Mat A = antisymmetrizer(f, k, base_dim);
  if (t * A != A * t) throw NotWedgeCompatible();
  return wedge_projection(f, base_dim, k) * t * wedge_injection(f, base_dim, k);
}

}  // namespace lefdec
