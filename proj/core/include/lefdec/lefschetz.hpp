#ifndef LEFDEC_LEFSCHETZ_HPP
#define LEFDEC_LEFSCHETZ_HPP

#include "lefdec/polarized.hpp"
#include "lefdec/span.hpp"

namespace lefdec {

inline constexpr std::int64_t kDefaultMaxOperatorDim = 5000;

/// Basis of lef = {X : Xe = eX for all e in E_basis, X^T phi + phi X = 0},
/// the Lie algebra of the symmetry group cut out by the datum.
std::vector<Mat> lie_algebra_basis(const PolarizedData& data);

/// Diagonal members of the Lie algebra (the split part of a Cartan). Their
/// equivariance constraints reduce to a weight-matching support filter, so
/// the centralizer solve processes them first.
std::vector<Mat> diagonal_lie_elements(const PolarizedData& data);

/// End of the n-th tensor power over the symmetry group: all F with
/// [diagonal_action(X, n), F] = 0 for X in the Lie algebra and
/// h^{(x)n} F = F h^{(x)n} for every extra group generator. Computed by
/// incremental kernel intersection, one constraint block at a time.
/// Throws SizeBudgetExceeded when m^n exceeds the budget.
OperatorSpan centralizer_basis(const PolarizedData& data, int n,
                               std::int64_t max_operator_dim = kDefaultMaxOperatorDim);

}  // namespace lefdec

#endif
