#include "lefdec/field.hpp"

#include <cassert>
#include <map>
#include <mutex>

#include "lefdec/errors.hpp"
#include "lefdec/poly.hpp"

namespace lefdec {

namespace {

const Field* require_common_field(const Scalar& a, const Scalar& b) {
  const Field* fa = a.field();
  const Field* fb = b.field();
  if (fa == nullptr) return fb;
  if (fb == nullptr) return fa;
  if (fa == fb || *fa == *fb) return fa;
  throw ValidationError("scalar_field_mismatch",
                        "operands live in different fields");
}

}  // namespace

Scalar::Scalar(const Field* field, std::vector<Rational> coords)
    : fld_(field), c_(std::move(coords)) {
  assert(field != nullptr);
  assert(static_cast<int>(c_.size()) == field->degree());
}

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (!lefdec::is_zero(q)) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (!lefdec::is_zero(c_[k])) return false;
  return true;
}

Rational Scalar::rational_part() const {
  return c_.empty() ? Rational(0) : c_[0];
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  const Field* f = require_common_field(*this, o);
  if (f == nullptr) return *this;  // 0 + 0
  if (fld_ == nullptr) {
    *this = o;
    return *this;
  }
  if (o.fld_ == nullptr) return *this;
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const Field* f = require_common_field(*this, o);
  if (fld_ == nullptr || o.fld_ == nullptr) {
    *this = Scalar();  // zero annihilates
    return *this;
  }
  const int d = f->degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (lefdec::is_zero(c_[i])) continue;
    for (int j = 0; j < d; ++j) {
      if (lefdec::is_zero(o.c_[j])) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = f->reduce(std::move(prod));
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  return *this *= o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (fld_ == nullptr) return o.is_zero();
  if (o.fld_ == nullptr) return is_zero();
  require_common_field(*this, o);
  return c_ == o.c_;
}

Scalar Scalar::inverse() const {
  if (is_zero() || fld_ == nullptr) throw NotInvertible();
  const Field& f = *fld_;
  if (f.degree() == 1) return Scalar(fld_, {Rational(1) / c_[0]});
  // Extended Euclid in Q[x]: u * rep + v * m = gcd; gcd must be constant.
  const Field& Q = Field::rationals();
  Poly a = Poly::from_rationals(&Q, c_);
  Poly m = Poly::from_rationals(&Q, f.min_poly());
  Poly r0 = m, r1 = a;
  Poly s0(&Q), s1 = Poly::constant(&Q, Q.one());
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    Poly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0.degree() != 0) throw NotInvertible();  // zero divisor in a quotient
  Poly inv = s0 * r0.leading().inverse();
  std::vector<Rational> coords(f.degree(), Rational(0));
  for (int k = 0; k <= inv.degree() && k < f.degree(); ++k)
    coords[k] = inv.coeff(k).rational_part();
  return Scalar(fld_, std::move(coords));
}

std::string Scalar::to_string() const {
  if (fld_ == nullptr) return "0";
  if (fld_->degree() == 1) return lefdec::to_string(c_[0]);
  std::string s = "[";
  for (size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ", ";
    s += lefdec::to_string(c_[k]);
  }
  return s + "]";
}

Field::Field(std::vector<Rational> min_poly) : min_poly_(std::move(min_poly)) {
  if (min_poly_.size() < 2)
    throw ValidationError("min_poly_degree", "degree must be at least 1");
  degree_ = static_cast<int>(min_poly_.size()) - 1;
  if (min_poly_.back() != Rational(1))
    throw ValidationError("min_poly_monic", "leading coefficient must be 1");
  if (degree_ == 1) return;
  const Field& Q = rationals();
  Poly m = Poly::from_rationals(&Q, min_poly_);
  if (!is_squarefree(m))
    throw ValidationError("min_poly_squarefree",
                          "gcd with the derivative is non-constant");
  if (!rational_roots(m).empty())
    throw ValidationError("min_poly_has_rational_root",
                          "reducible over Q: " + m.to_string("x"));
  // Degrees 2 and 3 are irreducible once no rational root exists; beyond
  // that we trust the caller and surface a warning flag in reports.
  irreducibility_trusted_ = degree_ >= 4;
}

const Field& Field::rationals() {
  static const Field q{std::vector<Rational>{Rational(0), Rational(1)}};
  return q;
}

Scalar Field::zero() const {
  return Scalar(this, std::vector<Rational>(degree_, Rational(0)));
}

Scalar Field::one() const { return from_rational(Rational(1)); }

Scalar Field::from_rational(const Rational& r) const {
  std::vector<Rational> c(degree_, Rational(0));
  c[0] = r;
  return Scalar(this, std::move(c));
}

Scalar Field::generator() const {
  if (degree_ < 2)
    throw ValidationError("field_generator", "Q has no extension generator");
  std::vector<Rational> c(degree_, Rational(0));
  c[1] = 1;
  return Scalar(this, std::move(c));
}

Scalar Field::from_coords(std::vector<Rational> coords) const {
  if (static_cast<int>(coords.size()) != degree_)
    throw ValidationError("scalar_coords",
                          "expected " + std::to_string(degree_) +
                              " coordinates, got " +
                              std::to_string(coords.size()));
  return Scalar(this, std::move(coords));
}

std::vector<Rational> Field::reduce(std::vector<Rational> c) const {
  const int d = degree_;
  for (int k = static_cast<int>(c.size()) - 1; k >= d; --k) {
    if (lefdec::is_zero(c[k])) continue;
    Rational lead = c[k];
    c[k] = 0;
    for (int j = 0; j < d; ++j) c[k - d + j] -= lead * min_poly_[j];
  }
  c.resize(d, Rational(0));
  return c;
}

std::string Field::describe() const {
  if (degree_ == 1) return "Q";
  const Field& Q = rationals();
  return "Q[x]/(" + Poly::from_rationals(&Q, min_poly_).to_string("x") + ")";
}

FieldPtr intern_field(const std::vector<Rational>& min_poly) {
  static std::mutex mutex;
  static std::map<std::vector<Rational>, FieldPtr>* registry =
      new std::map<std::vector<Rational>, FieldPtr>();
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry->find(min_poly);
  if (it != registry->end()) return it->second;
  FieldPtr field = std::make_shared<Field>(min_poly);
  registry->emplace(min_poly, field);
  return field;
}

FieldPtr intern_rationals() {
  return intern_field({Rational(0), Rational(1)});
}

int scalar_compare(const Scalar& a, const Scalar& b) {
  const size_t n = std::max(a.coords().size(), b.coords().size());
  for (size_t k = 0; k < n; ++k) {
    Rational av = k < a.coords().size() ? a.coords()[k] : Rational(0);
    Rational bv = k < b.coords().size() ? b.coords()[k] : Rational(0);
    int c = cmp(av, bv);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace lefdec
