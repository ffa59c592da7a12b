#ifndef LEFDEC_CLOSURE_HPP
#define LEFDEC_CLOSURE_HPP

#include <string>
#include <vector>

#include "lefdec/budgets.hpp"
#include "lefdec/lefschetz.hpp"
#include "lefdec/words.hpp"

namespace lefdec {

/// A span of operators where every canonical basis element carries an exact
/// expression as a linear combination of generator words.
class WitnessedSpan {
 public:
  WitnessedSpan(const Field* field, int side)
      : side_(side), builder_(field) {}

  const Field* field() const { return builder_.field(); }
  int side() const { return side_; }
  int dim() const { return builder_.dim(); }
  const std::vector<Mat>& basis() const { return basis_; }
  WitnessCombo witness(int row) const { return builder_.rows()[row].payload; }

  bool insert(const Mat& m, WitnessCombo witness);
  bool contains(const Mat& m) const { return builder_.contains(flatten(m)); }
  /// Coordinates in the canonical basis (nullopt if outside) and the
  /// corresponding witness combination.
  std::optional<std::pair<std::vector<Scalar>, WitnessCombo>> express(
      const Mat& m) const;

  OperatorSpan to_operator_span() const;

 private:
  int side_;
  SpanBuilder<WitnessCombo> builder_;
  std::vector<Mat> basis_;
};

struct BnGenerator {
  GeneratorAtom atom;
  Mat mat;
};

/// The three generator families on V^{otimes n}: adjacent transpositions
/// (signed), one E_basis endomorphism per index acting on the first factor,
/// and the pairing projector on the first two factors (n >= 2).
std::vector<BnGenerator> bn_generators(const PolarizedData& data, int n,
                                       const Budgets& budgets = {});

/// Breadth-first closure of {Id} + generators under left multiplication by
/// generators, with exact witness tracking. Stops when one full wave adds
/// nothing; throws SizeBudgetExceeded if max_closure_waves is hit first.
WitnessedSpan algebra_closure(const Field* field, int side,
                              const std::vector<BnGenerator>& gens,
                              const Budgets& budgets = {});

/// The r-fold product datum: V^{(+)r} with the block-diagonal pairing,
/// matrix-unit-decorated endomorphism basis, and blockwise-promoted extra
/// generators.
PolarizedData product_data(const PolarizedData& data, int r);

struct ThmCleReport {
  int n = 0;
  int dim_closure = 0;
  int dim_centralizer = 0;
  int dim_diagram = 0;
  bool closure_eq_centralizer = false;
  bool centralizer_eq_diagram = false;
  bool diagram_eq_closure = false;
  bool missing_components_suspected = false;
  bool pass() const {
    return closure_eq_centralizer && centralizer_eq_diagram &&
           diagram_eq_closure;
  }
};

/// Three-way span comparison: generator closure vs equivariance centralizer
/// vs decorated-matching span, all computed independently.
ThmCleReport verify_thm_cle(const PolarizedData& data, int n,
                            const Budgets& budgets = {});

/// The compressed algebra on the wedge power: the closure for the r-fold
/// product datum at tensor power i, conjugated by the antisymmetrizer and
/// restricted to the wedge basis. Witness words are words in the product
/// datum's generators; the antisymmetrizer bracketing is implicit.
WitnessedSpan bir_algebra(const PolarizedData& data, int i, int r,
                          const Budgets& budgets = {});

struct CorPrincReport {
  int i = 0, r = 0;
  int dim_bir = 0;
  int dim_compressed_centralizer = 0;
  bool spans_equal = false;
  bool pass() const { return spans_equal; }
};

/// Wedge-level comparison: compressed closure vs compressed centralizer.
CorPrincReport verify_cor_princ(const PolarizedData& data, int i, int r,
                                const Budgets& budgets = {});

}  // namespace lefdec

#endif
