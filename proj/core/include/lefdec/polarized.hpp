#ifndef LEFDEC_POLARIZED_HPP
#define LEFDEC_POLARIZED_HPP

#include <vector>

#include "lefdec/matrix.hpp"

namespace lefdec {

/// The validated input datum: V = F^{2g} with an alternating invertible
/// pairing, a product-closed endomorphism-algebra basis that is stable under
/// the pairing's anti-involution, and optional extra isometry generators for
/// non-connected symmetry groups. Immutable after construction; every
/// invariant is enforced here rather than at solve time.
class PolarizedData {
 public:
  PolarizedData(FieldPtr field, int g, Mat phi, std::vector<Mat> e_basis,
                std::vector<Mat> extra_generators);

  const Field* field() const { return field_.get(); }
  FieldPtr field_ptr() const { return field_; }
  int g() const { return g_; }
  int m() const { return 2 * g_; }
  const Mat& phi() const { return phi_; }
  const std::vector<Mat>& e_basis() const { return e_basis_; }
  const std::vector<Mat>& extra_generators() const { return extra_; }

  /// The anti-involution f -> phi^{-1} f^T phi.
  Mat rosati(const Mat& f) const;

 private:
  void validate() const;
  FieldPtr field_;
  int g_;
  Mat phi_;
  std::vector<Mat> e_basis_;
  std::vector<Mat> extra_;
  Mat phi_inv_;
};

}  // namespace lefdec

#endif
