#ifndef LEFDEC_WORDS_HPP
#define LEFDEC_WORDS_HPP

#include <map>
#include <vector>

#include "lefdec/polarized.hpp"
#include "lefdec/span.hpp"
#include "lefdec/tensor.hpp"

namespace lefdec {

/// One letter of a word in the three generator families: a permutation of
/// the tensor slots, an endomorphism acting on the first factor, or the
/// pairing projector on the first two factors.
struct GeneratorAtom {
  enum class Kind { Perm, Endo, Proj };
  Kind kind = Kind::Perm;
  Perm perm;           // Kind::Perm
  int endo_index = 0;  // Kind::Endo

  static GeneratorAtom make_perm(Perm p);
  static GeneratorAtom make_endo(int index);
  static GeneratorAtom make_proj();

  bool operator==(const GeneratorAtom& o) const;
  bool operator<(const GeneratorAtom& o) const;
};

/// A word evaluates to the ordered product of its atoms' matrices
/// (leftmost atom applied last). The empty word is the identity.
using Word = std::vector<GeneratorAtom>;

/// Linear combination of words; the exact witness format.
using WitnessCombo = std::map<Word, Scalar>;

void payload_axpy(WitnessCombo& w, const Scalar& c, const WitnessCombo& o);
void payload_scale(WitnessCombo& w, const Scalar& c);

Mat eval_atom(const GeneratorAtom& atom, const PolarizedData& data, int n);
Mat eval_word(const Word& word, const PolarizedData& data, int n);
Mat eval_combo(const WitnessCombo& combo, const PolarizedData& data, int n);

}  // namespace lefdec

#endif
