#ifndef LEFDEC_DIAGRAMS_HPP
#define LEFDEC_DIAGRAMS_HPP

#include <vector>

#include "lefdec/lefschetz.hpp"
#include "lefdec/polarized.hpp"

namespace lefdec {

/// A perfect matching on the 2n slots {in_1..in_n, out_1..out_n} with one
/// E_basis index per pair. Slots are numbered 0..n-1 (inputs) and n..2n-1
/// (outputs); pairs are stored (low, high) and sorted, which fixes the
/// canonical enumeration order.
struct DecoratedMatching {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> decorations;  // E_basis index per pair

  bool is_through(int pair_idx) const {
    return pairs[pair_idx].first < n && pairs[pair_idx].second >= n;
  }
  bool is_in_in(int pair_idx) const { return pairs[pair_idx].second < n; }
  bool is_out_out(int pair_idx) const { return pairs[pair_idx].first >= n; }
};

/// All perfect matchings of 2n slots with trivial decorations, in the
/// canonical order (pair the smallest free slot first). (2n-1)!! of them.
std::vector<DecoratedMatching> enumerate_matchings(int n);

/// The operator on V^{otimes n} realizing a decorated matching: signed
/// sorting permutations around a normal form Id^{(x)t} (x) (iota o pi)^{(x)c},
/// with strand decorations applied on input slots (through and in-in
/// strands) or after creation (out-out strands). Every sign comes from
/// signed_perm.
Mat matching_to_operator(const DecoratedMatching& mu, const PolarizedData& data);

/// Span of all decorated matching operators: the classical spanning set for
/// the centralizer. Decorations sweep E_basis^n.
OperatorSpan diagram_span(const PolarizedData& data, int n,
                          std::int64_t max_operator_dim = kDefaultMaxOperatorDim);

}  // namespace lefdec

#endif
