#include "lefdec/polarized.hpp"

#include "lefdec/errors.hpp"
#include "lefdec/span.hpp"

namespace lefdec {

PolarizedData::PolarizedData(FieldPtr field, int g, Mat phi,
                             std::vector<Mat> e_basis,
                             std::vector<Mat> extra_generators)
    : field_(std::move(field)),
      g_(g),
      phi_(std::move(phi)),
      e_basis_(std::move(e_basis)),
      extra_(std::move(extra_generators)) {
  if (g_ < 1)
    throw ValidationError("positive_dimension", "g must be at least 1");
  if (phi_.rows() != m() || phi_.cols() != m())
    throw ValidationError("phi_shape", "pairing must be 2g x 2g");
  if (!phi_.is_alternating())
    throw ValidationError("phi_alternating", "pairing must satisfy phi^T = -phi");
  try {
    phi_inv_ = phi_.inverse();
  } catch (const NotInvertible&) {
    throw ValidationError("phi_invertible", "pairing matrix is singular");
  }
  validate();
}

Mat PolarizedData::rosati(const Mat& f) const {
  return phi_inv_ * f.transpose() * phi_;
}

void PolarizedData::validate() const {
  if (e_basis_.empty())
    throw ValidationError("E_basis_nonempty", "need at least the identity");
  for (const Mat& e : e_basis_)
    if (e.rows() != m() || e.cols() != m())
      throw ValidationError("E_basis_shape", "endomorphisms must be 2g x 2g");
  OperatorSpan espan = OperatorSpan::from_mats(field(), m(), e_basis_);
  if (espan.dim() != static_cast<int>(e_basis_.size()))
    throw ValidationError("E_basis_linearly_independent",
                          "listed endomorphisms are linearly dependent");
  if (!espan.contains(Mat::identity(field(), m())))
    throw ValidationError("id_in_E_span", "identity not in span(E_basis)");
  for (const Mat& a : e_basis_)
    for (const Mat& b : e_basis_)
      if (!espan.contains(a * b))
        throw ValidationError("E_basis_product_closed",
                              "span(E_basis) is not closed under products");
  for (const Mat& e : e_basis_)
    if (!espan.contains(rosati(e)))
      throw ValidationError("rosati_stability",
                            "span(E_basis) is not stable under f -> phi^-1 f^T phi");
  for (const Mat& h : extra_) {
    if (h.rows() != m() || h.cols() != m())
      throw ValidationError("extra_generator_shape",
                            "extra generators must be 2g x 2g");
    for (const Mat& e : e_basis_)
      if (h * e != e * h)
        throw ValidationError("extra_generator_commutes_with_E",
                              "extra generator does not commute with E_basis");
    if (h.transpose() * phi_ * h != phi_)
      throw ValidationError("extra_generator_isometry",
                            "extra generator does not preserve the pairing");
  }
}

}  // namespace lefdec
