#ifndef LEFDEC_POLY_HPP
#define LEFDEC_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lefdec/field.hpp"

namespace lefdec {

/// Dense univariate polynomial over a Field. Coefficient k is the y^k term;
/// the zero polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  explicit Poly(const Field* field) : fld_(field) {}
  Poly(const Field* field, std::vector<Scalar> coeffs);
  static Poly from_rationals(const Field* field,
                             const std::vector<Rational>& coeffs);
  static Poly constant(const Field* field, const Scalar& c);

  const Field* field() const { return fld_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Scalar coeff(int k) const;
  const Scalar& leading() const;
  bool is_monic() const;
  bool has_rational_coeffs() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& s) const;
  bool operator==(const Poly& o) const;

  Poly make_monic() const;
  Poly derivative() const;
  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Scalar eval(const Scalar& at) const;
  /// Deflation by a root: returns *this / (y - root); the division is exact
  /// only when root is actually a root.
  Poly deflate(const Scalar& root) const;

  std::string to_string(const std::string& var = "y") const;

 private:
  void normalize();
  const Field* fld_;
  std::vector<Scalar> c_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);
bool is_squarefree(const Poly& p);

/// Complete list of rational roots, each with its multiplicity removed from
/// consideration exactly once per occurrence. Requires rational coefficients.
std::vector<Rational> rational_roots(const Poly& p);

/// Exact square root of t inside the field, when one exists. Complete for
/// Q and for quadratic extensions; for higher-degree extensions only
/// rational square roots of rational elements are found.
std::optional<Scalar> sqrt_in_field(const Field& f, const Scalar& t);

struct RootSplit {
  std::vector<Scalar> roots;
  /// The factor that could not be split into linear factors over the field,
  /// when splitting is incomplete.
  std::optional<Poly> nonsplit;
  bool full_split() const { return !nonsplit.has_value(); }
};

/// Splits a squarefree polynomial into linear factors over its field when
/// possible. Rational roots are found completely; leftover quadratics are
/// resolved through exact square roots in the field; anything else is
/// reported in `nonsplit`.
RootSplit roots_in_field(const Poly& p);

}  // namespace lefdec

#endif
