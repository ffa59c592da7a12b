#ifndef LEFDEC_FIELD_HPP
#define LEFDEC_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "lefdec/rational.hpp"

namespace lefdec {

class Field;

/// Element of Q or of a simple extension Q[x]/(m), stored as coordinates in
/// the power basis 1, x, ..., x^{d-1}. A default-constructed Scalar is the
/// field-agnostic exact zero, so sparse containers can hand out zeros without
/// knowing the field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field* field, std::vector<Rational> coords);

  bool is_null_zero() const { return fld_ == nullptr; }
  const Field* field() const { return fld_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // all coords above degree 0 vanish
  /// The degree-0 coordinate; only meaningful when is_rational().
  Rational rational_part() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;  // throws NotInvertible on zero

  std::string to_string() const;

 private:
  friend class Field;
  const Field* fld_ = nullptr;
  std::vector<Rational> c_;
};

/// The coefficient field: Q when degree() == 1, otherwise Q[x]/(m) for a
/// monic squarefree m with no rational root. Irreducibility is fully decided
/// only up to degree 3; beyond that it is trusted and flagged.
class Field {
 public:
  /// min_poly holds c0..cd for m = c0 + c1 x + ... + cd x^d; cd must be 1.
  explicit Field(std::vector<Rational> min_poly);

  static const Field& rationals();

  int degree() const { return degree_; }
  const std::vector<Rational>& min_poly() const { return min_poly_; }
  /// True when d >= 4, where irreducibility is assumed rather than checked.
  bool irreducibility_trusted() const { return irreducibility_trusted_; }

  bool operator==(const Field& o) const { return min_poly_ == o.min_poly_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_rational(const Rational& r) const;
  Scalar from_int(long v) const { return from_rational(Rational(v)); }
  /// The class of x; requires degree >= 2.
  Scalar generator() const;
  Scalar from_coords(std::vector<Rational> coords) const;

  std::string describe() const;  // e.g. "Q" or "Q[x]/(x^2 + 1)"

 private:
  friend class Scalar;
  /// Reduces a coefficient vector of any length modulo the minimal
  /// polynomial, returning exactly degree() coordinates.
  std::vector<Rational> reduce(std::vector<Rational> c) const;

  std::vector<Rational> min_poly_;
  int degree_;
  bool irreducibility_trusted_ = false;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Process-lifetime field instances, one per minimal polynomial. Matrices
/// and spans hold plain Field pointers, so anything that may outlive its
/// construction context (reports, cached spans) should be built over an
/// interned field.
FieldPtr intern_field(const std::vector<Rational>& min_poly);
FieldPtr intern_rationals();

/// Total order on scalars of one field (coordinate-lexicographic); used for
/// canonical, seed-independent orderings in reports.
int scalar_compare(const Scalar& a, const Scalar& b);

}  // namespace lefdec

#endif
