#ifndef LEFDEC_MATRIX_HPP
#define LEFDEC_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lefdec/field.hpp"
#include "lefdec/poly.hpp"

namespace lefdec {

/// Sorted-by-column sparse row; entries are always nonzero.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// Exact matrix over a Field with sparse row storage. One representation
/// serves both the small dense operators and the large structured ones; ops
/// skip zeros, so permutation-like operators stay cheap at any size.
class Mat {
 public:
  Mat() = default;
  Mat(const Field* field, int rows, int cols);
  static Mat identity(const Field* field, int n);
  static Mat from_rows(const Field* field,
                       const std::vector<std::vector<Rational>>& rows);
  static Mat from_scalar_rows(const Field* field,
                              const std::vector<std::vector<Scalar>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field* field() const { return fld_; }
  const SparseRow& row(int i) const { return data_[i]; }
  std::int64_t nnz() const;

  Scalar get(int i, int j) const;
  void set(int i, int j, Scalar v);
  void add_to(int i, int j, const Scalar& v);

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Scalar& s) const;
  Mat operator-() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_identity() const;
  bool is_diagonal() const;
  bool is_alternating() const;  // square and M^T == -M
  Mat transpose() const;
  Scalar trace() const;
  Mat kron(const Mat& o) const;
  Mat inverse() const;  // throws NotInvertible
  Mat pow(long e) const;

  /// Applies M to a dense vector.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  const Field* fld_ = nullptr;
  std::vector<SparseRow> data_;
};

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

struct RrefResult {
  Mat reduced;                  // zero rows dropped, pivots normalized to 1
  int rank = 0;
  std::vector<int> pivot_cols;  // ascending
};

/// Reduced row echelon form with the deterministic leftmost-pivot rule.
RrefResult rref(const Mat& m);

/// Exact basis of the right null space {v : Mv = 0}, as dense vectors,
/// ordered by ascending free column.
std::vector<std::vector<Scalar>> kernel_basis(const Mat& m);

int rank_of(const Mat& m);

/// Monic minimal polynomial by Krylov iteration over standard basis seeds,
/// combining per-seed annihilators with lcm until the matrix is annihilated.
Poly min_poly_of(const Mat& m);

}  // namespace lefdec

#endif
