#ifndef LEFDEC_ISOTYPIC_HPP
#define LEFDEC_ISOTYPIC_HPP

#include <optional>

#include "lefdec/closure.hpp"

namespace lefdec {

/// Basis of {z in span : zb = bz for every basis element b}. The input span
/// must be closed under multiplication.
OperatorSpan center_basis(const OperatorSpan& alg);

/// The primitive central idempotents of a multiplicatively closed span over
/// a semisimple setting: a seeded pseudo-random rational combination of the
/// center is split through its minimal polynomial. Throws
/// SplittingFieldRequired when the polynomial does not factor into distinct
/// linear factors over the field, CenterNotSeparated when no combination
/// generates the center within the retry budget. Result is ordered by
/// (rank, lexicographic matrix entries).
std::vector<Mat> primitive_idempotents(const OperatorSpan& alg,
                                       unsigned long long seed = 0,
                                       int retries = 8);

struct DecompositionComponent {
  Mat idempotent;
  int rank = 0;
  WitnessCombo witness;      // expression inside the compressed algebra
  std::optional<int> twist;  // set on trivially-acted components
};

struct DecompositionCertificates {
  bool idempotent = false;
  bool orthogonal = false;
  bool complete = false;
  bool equivariant = false;
  bool witnesses_exact = false;
  bool rank_sum_matches = false;
  bool all() const {
    return idempotent && orthogonal && complete && equivariant &&
           witnesses_exact && rank_sum_matches;
  }
};

struct DecompositionReport {
  int i = 0, r = 0;
  unsigned long long seed = 0;
  std::int64_t wedge_dim = 0;
  CorPrincReport cor_princ;
  std::vector<DecompositionComponent> components;
  /// Non-canonical finer splittings into irreducible copies, one list per
  /// component; filled only on request.
  std::vector<std::vector<Mat>> fine_components;
  DecompositionCertificates certificates;
};

/// Canonical isotypic decomposition of the i-th wedge power of the r-fold
/// product: verifies the span equality first, extracts the primitive
/// central idempotents, expresses each one inside the witnessed algebra and
/// certifies orthogonality, completeness and equivariance exactly.
DecompositionReport decompose(const PolarizedData& data, int i, int r,
                              unsigned long long seed = 0,
                              const Budgets& budgets = {},
                              bool fine_split_components = false);

struct Intertwiner {
  Mat u;  // element of the algebra restricting to an iso im(p) -> im(q)
  Mat v;  // exact two-sided inverse on the images: v u p = p, u v q = q
};

/// Searches the span for an element of full rank between the images of two
/// idempotents; std::nullopt means the components are not isomorphic (after
/// the seeded combination search is exhausted, which for equal-rank
/// components of a semisimple algebra is decisive in practice).
std::optional<Intertwiner> intertwiner(const OperatorSpan& alg, const Mat& p,
                                       const Mat& q,
                                       unsigned long long seed = 0,
                                       int retries = 8);

/// Non-canonical refinement of a central idempotent into minimal orthogonal
/// idempotents of the corner algebra; requires the relevant minimal
/// polynomials to split over the field.
std::vector<Mat> fine_split(const OperatorSpan& alg, const Mat& idempotent,
                            unsigned long long seed = 0, int retries = 8);

}  // namespace lefdec

#endif
