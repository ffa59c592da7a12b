#include "lefdec/poly.hpp"

#include <algorithm>

#include "lefdec/errors.hpp"

namespace lefdec {

Poly::Poly(const Field* field, std::vector<Scalar> coeffs)
    : fld_(field), c_(std::move(coeffs)) {
  normalize();
}

Poly Poly::from_rationals(const Field* field,
                          const std::vector<Rational>& coeffs) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.push_back(field->from_rational(q));
  return Poly(field, std::move(c));
}

Poly Poly::constant(const Field* field, const Scalar& c) {
  return Poly(field, std::vector<Scalar>{c});
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return fld_->zero();
  return c_[k];
}

const Scalar& Poly::leading() const { return c_.back(); }

bool Poly::is_monic() const {
  return !c_.empty() && c_.back() == fld_->one();
}

bool Poly::has_rational_coeffs() const {
  for (const auto& s : c_)
    if (!s.is_rational()) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), fld_->zero());
  for (size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) c[k] += o.c_[k];
  return Poly(fld_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + o * -fld_->one(); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(fld_);
  std::vector<Scalar> c(c_.size() + o.c_.size() - 1, fld_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return Poly(fld_, std::move(c));
}

Poly Poly::operator*(const Scalar& s) const {
  std::vector<Scalar> c = c_;
  for (auto& x : c) x *= s;
  return Poly(fld_, std::move(c));
}

bool Poly::operator==(const Poly& o) const {
  if (degree() != o.degree()) return false;
  for (size_t k = 0; k < c_.size(); ++k)
    if (!(c_[k] == o.c_[k])) return false;
  return true;
}

Poly Poly::make_monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(fld_);
  std::vector<Scalar> c;
  c.reserve(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k)
    c.push_back(c_[k] * fld_->from_int(static_cast<long>(k)));
  return Poly(fld_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw ValidationError("poly_divmod", "division by zero");
  Poly r = *this;
  if (r.degree() < d.degree()) return {Poly(fld_), r};
  std::vector<Scalar> q(r.degree() - d.degree() + 1, fld_->zero());
  Scalar lead_inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Scalar f = r.leading() * lead_inv;
    q[shift] = f;
    std::vector<Scalar> rc = r.c_;
    for (int k = 0; k <= d.degree(); ++k) rc[k + shift] -= f * d.c_[k];
    r = Poly(fld_, std::move(rc));
  }
  return {Poly(fld_, std::move(q)), r};
}

Scalar Poly::eval(const Scalar& at) const {
  Scalar acc = fld_->zero();
  for (int k = degree(); k >= 0; --k) acc = acc * at + c_[k];
  return acc;
}

Poly Poly::deflate(const Scalar& root) const {
  // synthetic division by (y - root)
  if (is_zero()) return *this;
  std::vector<Scalar> q(c_.size() - 1, fld_->zero());
  Scalar carry = fld_->zero();
  for (int k = degree(); k >= 1; --k) {
    carry = c_[k] + carry * root;
    q[k - 1] = carry;
  }
  return Poly(fld_, std::move(q));
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[k].to_string();
    if (k >= 1) s += "*" + var;
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    (void)q;
    r0 = r1;
    r1 = r2;
  }
  return r0.make_monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  Poly g = poly_gcd(a, b);
  auto [q, r] = (a * b).divmod(g);
  (void)r;
  return q.make_monic();
}

bool is_squarefree(const Poly& p) {
  if (p.degree() <= 1) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (!p.has_rational_coeffs())
    throw ValidationError("rational_roots", "polynomial has non-rational coefficients");
  std::vector<Rational> roots;
  Poly cur = p;
  while (cur.degree() >= 1) {
    // strip roots at zero
    if (cur.coeff(0).is_zero()) {
      roots.emplace_back(0);
      cur = cur.deflate(cur.field()->zero());
      continue;
    }
    // scale to an integer polynomial
    Integer den_lcm = 1;
    for (int k = 0; k <= cur.degree(); ++k) {
      Integer d = cur.coeff(k).rational_part().get_den();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Integer a0 = Rational(cur.coeff(0).rational_part() * den_lcm).get_num();
    Integer al =
        Rational(cur.coeff(cur.degree()).rational_part() * den_lcm).get_num();
    bool found = false;
    auto try_root = [&](const Rational& cand) {
      if (cur.eval(cur.field()->from_rational(cand)).is_zero()) {
        roots.push_back(cand);
        cur = cur.deflate(cur.field()->from_rational(cand));
        found = true;
        return true;
      }
      return false;
    };
    for (const Integer& u : positive_divisors(a0)) {
      if (found) break;
      for (const Integer& v : positive_divisors(al)) {
        Rational cand(u, v);
        cand.canonicalize();
        if (try_root(cand) || try_root(-cand)) break;
      }
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<Scalar> sqrt_in_field(const Field& f, const Scalar& t) {
  if (t.is_zero()) return f.zero();
  if (t.is_rational()) {
    if (auto r = rational_sqrt(t.rational_part())) return f.from_rational(*r);
    if (f.degree() != 2) return std::nullopt;
    // s = u + v*x with u = c1*v/2 and v^2 = 4t / (c1^2 - 4c0)
    const Rational c0 = f.min_poly()[0], c1 = f.min_poly()[1];
    Rational disc = c1 * c1 - 4 * c0;
    auto v = rational_sqrt(Rational(4) * t.rational_part() / disc);
    if (!v) return std::nullopt;
    Scalar s = f.from_coords({c1 * *v / 2, *v});
    return s * s == t ? std::optional<Scalar>(s) : std::nullopt;
  }
  if (f.degree() != 2) return std::nullopt;
  // s = u + v*x, v != 0: eliminate u and solve the biquadratic in v.
  const Rational c0 = f.min_poly()[0], c1 = f.min_poly()[1];
  const Rational t0 = t.coords()[0], t1 = t.coords()[1];
  const Rational A = c1 * c1 - 4 * c0;
  const Rational B = 2 * c1 * t1 - 4 * t0;
  const Rational C = t1 * t1;
  std::vector<Rational> w_candidates;
  if (lefdec::is_zero(A)) {
    if (!lefdec::is_zero(B)) w_candidates.push_back(-C / B);
  } else {
    auto d = rational_sqrt(B * B - 4 * A * C);
    if (!d) return std::nullopt;
    w_candidates.push_back((-B + *d) / (2 * A));
    w_candidates.push_back((-B - *d) / (2 * A));
  }
  for (const Rational& w : w_candidates) {
    auto v = rational_sqrt(w);
    if (!v || lefdec::is_zero(*v)) continue;
    Rational u = (t1 + c1 * w) / (2 * *v);
    Scalar s = f.from_coords({u, *v});
    if (s * s == t) return s;
  }
  return std::nullopt;
}

RootSplit roots_in_field(const Poly& p) {
  const Field& f = *p.field();
  RootSplit out;
  if (p.degree() <= 0) return out;
  if (!is_squarefree(p))
    throw ValidationError("roots_in_field", "polynomial must be squarefree");
  Poly cur = p.make_monic();
  if (cur.has_rational_coeffs()) {
    for (const Rational& r : rational_roots(cur)) {
      out.roots.push_back(f.from_rational(r));
      cur = cur.deflate(f.from_rational(r));
    }
  }
  if (cur.degree() == 1) {
    out.roots.push_back(-cur.coeff(0));
    return out;
  }
  if (cur.degree() == 2) {
    // y^2 + b y + c
    Scalar b = cur.coeff(1), c = cur.coeff(0);
    Scalar disc = b * b - f.from_int(4) * c;
    if (auto s = sqrt_in_field(f, disc)) {
      Scalar half = f.from_rational(Rational(1, 2));
      out.roots.push_back((-b + *s) * half);
      out.roots.push_back((-b - *s) * half);
      return out;
    }
    out.nonsplit = cur;
    return out;
  }
  if (cur.degree() >= 3) out.nonsplit = cur;
  return out;
}

}  // namespace lefdec
