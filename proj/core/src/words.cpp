#include "lefdec/words.hpp"

#include "lefdec/errors.hpp"

namespace lefdec {

GeneratorAtom GeneratorAtom::make_perm(Perm p) {
  GeneratorAtom a;
  a.kind = Kind::Perm;
  a.perm = std::move(p);
  return a;
}

GeneratorAtom GeneratorAtom::make_endo(int index) {
  GeneratorAtom a;
  a.kind = Kind::Endo;
  a.endo_index = index;
  return a;
}

GeneratorAtom GeneratorAtom::make_proj() {
  GeneratorAtom a;
  a.kind = Kind::Proj;
  return a;
}

bool GeneratorAtom::operator==(const GeneratorAtom& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Perm:
      return perm == o.perm;
    case Kind::Endo:
      return endo_index == o.endo_index;
    case Kind::Proj:
      return true;
  }
  return false;
}

bool GeneratorAtom::operator<(const GeneratorAtom& o) const {
  if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
  switch (kind) {
    case Kind::Perm:
      return perm < o.perm;
    case Kind::Endo:
      return endo_index < o.endo_index;
    case Kind::Proj:
      return false;
  }
  return false;
}

void payload_axpy(WitnessCombo& w, const Scalar& c, const WitnessCombo& o) {
  if (c.is_zero()) return;
  for (const auto& [word, coef] : o) {
    auto [it, fresh] = w.try_emplace(word, Scalar());
    it->second += c * coef;
    if (it->second.is_zero()) w.erase(it);
  }
}

void payload_scale(WitnessCombo& w, const Scalar& c) {
  for (auto& [word, coef] : w) coef *= c;
}

Mat eval_atom(const GeneratorAtom& atom, const PolarizedData& data, int n) {
  const Field* f = data.field();
  const int m = data.m();
  switch (atom.kind) {
    case GeneratorAtom::Kind::Perm: {
      if (atom.perm.size() != n)
        throw InvalidParams("word atom: permutation size mismatch");
      return signed_perm(f, atom.perm, m);
    }
    case GeneratorAtom::Kind::Endo: {
      const auto& basis = data.e_basis();
      if (atom.endo_index < 0 ||
          atom.endo_index >= static_cast<int>(basis.size()))
        throw InvalidParams("word atom: endomorphism index out of range");
      return factor_embed(basis[atom.endo_index], 1, n);
    }
    case GeneratorAtom::Kind::Proj: {
      if (n < 2) throw InvalidParams("word atom: projector needs n >= 2");
      Mat p = projector_P(data.phi());
      std::int64_t rest = 1;
      for (int k = 2; k < n; ++k) rest *= m;
      return p.kron(Mat::identity(f, static_cast<int>(rest)));
    }
  }
  throw InvalidParams("word atom: unknown kind");
}

Mat eval_word(const Word& word, const PolarizedData& data, int n) {
  TensorSpace ts{data.m(), n};
  Mat acc = Mat::identity(data.field(), static_cast<int>(ts.dim()));
  for (const GeneratorAtom& atom : word) acc = acc * eval_atom(atom, data, n);
  return acc;
}

Mat eval_combo(const WitnessCombo& combo, const PolarizedData& data, int n) {
  TensorSpace ts{data.m(), n};
  Mat acc(data.field(), static_cast<int>(ts.dim()),
          static_cast<int>(ts.dim()));
  for (const auto& [word, coef] : combo)
    acc = acc + eval_word(word, data, n) * coef;
  return acc;
}

}  // namespace lefdec
