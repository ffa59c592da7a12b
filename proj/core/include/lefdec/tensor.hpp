#ifndef LEFDEC_TENSOR_HPP
#define LEFDEC_TENSOR_HPP

#include <cstdint>
#include <vector>

#include "lefdec/matrix.hpp"

namespace lefdec {

/// Permutation of {0, .., n-1} in one-line notation: img[k] is the image
/// of k. Operators built from permutations move the tensor factor at slot k
/// to slot img[k].
struct Perm {
  std::vector<int> img;

  static Perm identity(int n);
  /// Adjacent transposition (k, k+1), 0-based k.
  static Perm transposition(int n, int k);
  static Perm swap(int n, int a, int b);

  int size() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  Perm compose(const Perm& first) const;  // (*this) after `first`
  Perm inverse() const;
  int sign() const;
  /// Cycle decomposition, nontrivial cycles only, each rotated to start at
  /// its smallest element, sorted; 0-based entries.
  std::vector<std::vector<int>> cycles() const;
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

std::vector<Perm> all_perms(int n);

/// Index bookkeeping for V^{otimes n} with dim V = m: basis vectors are
/// tuples (i_0, .., i_{n-1}) in [0, m)^n, lexicographic, leftmost factor
/// most significant.
struct TensorSpace {
  int base_dim = 0;  // m
  int power = 0;     // n

  std::int64_t dim() const;
  std::int64_t encode(const std::vector<int>& tuple) const;
  std::vector<int> decode(std::int64_t index) const;
};

/// Tate-twist annotation carried by rank-1 trivially-acted components.
/// Composition adds twists.
struct WeightTag {
  int twist = 0;
  bool operator==(const WeightTag& o) const { return twist == o.twist; }
};

/// The tag carried by the rank-1 image of the pairing projector.
inline constexpr WeightTag kProjectorImageTag{-1};

/// Id^{(pos-1)} (x) M (x) Id^{(n-pos)} on V^{otimes n}; pos is 1-based.
Mat factor_embed(const Mat& m, int pos, int n);

/// sigma acting on V^{otimes n} with the odd-degree sign rule:
/// e_{i_0} (x) .. (x) e_{i_{n-1}} maps to sgn(sigma) times the tuple with
/// factor k moved to slot sigma(k).
Mat signed_perm(const Field* field, const Perm& sigma, int base_dim);

/// Diagonal action  sum_pos Id (x) .. (x) X (x) .. (x) Id.
Mat diagonal_action(const Mat& x, int n);

/// Pairing V (x) V -> F given by phi: row vector with entry phi_{ij} at
/// column (i, j). phi must be alternating and invertible.
Mat pairing_pi(const Mat& phi);

/// Copairing F -> V (x) V: column vector with entry (phi^{-1})_{ji} at row
/// (i, j); the index order makes pi o iota = +dim(V).
Mat copairing_iota(const Mat& phi);

/// P = (1/dim V) iota o pi, the rank-1 projector cutting out the twist line
/// inside V (x) V.
Mat projector_P(const Mat& phi);

/// (1/n!) sum_sigma signed_perm(sigma): idempotent projecting V^{otimes n}
/// onto the realization of the n-th wedge power; rank C(m, n).
Mat antisymmetrizer(const Field* field, int n, int base_dim);

std::int64_t binomial(int n, int k);

/// Strictly increasing k-tuples in [0, m), lexicographic.
std::vector<std::vector<int>> wedge_tuples(int base_dim, int k);

/// Injection Lambda^k V -> V^{otimes k} (columns are normalized signed
/// orbit sums) and the left-inverse projection. projection * injection = Id,
/// injection * projection = antisymmetrizer.
Mat wedge_injection(const Field* field, int base_dim, int k);
Mat wedge_projection(const Field* field, int base_dim, int k);

/// Matrix of T on the wedge basis. T must commute with the antisymmetrizer
/// (checked; throws NotWedgeCompatible), which makes the compression
/// multiplicative.
Mat compress_to_wedge(const Mat& t, int base_dim, int k);

}  // namespace lefdec

#endif
