#include <doctest.h>

#include <random>

#include "lefdec/errors.hpp"
#include "lefdec/field.hpp"
#include "lefdec/poly.hpp"

using namespace lefdec;

namespace {

Field make_gauss() {
  return Field({Rational(1), Rational(0), Rational(1)});  // x^2 + 1
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (int k = 0; k < f.degree(); ++k) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 4);
    c.emplace_back(num, den);
    c.back().canonicalize();
  }
  return f.from_coords(std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("field");

TEST_CASE("rational parsing and canonical form") {
  CHECK(to_string(rational_from_string("2/4")) == "1/2");
  CHECK(to_string(rational_from_string("-6/3")) == "-2");
  CHECK(to_string(rational_from_string("7")) == "7");
  CHECK_THROWS(rational_from_string("1/0"));
  CHECK_THROWS(rational_from_string("abc"));
}

TEST_CASE("rational square roots") {
  CHECK(to_string(*rational_sqrt(Rational(9, 4))) == "3/2");
  CHECK(to_string(*rational_sqrt(Rational(0))) == "0");
  CHECK(!rational_sqrt(Rational(2)).has_value());
  CHECK(!rational_sqrt(Rational(-4)).has_value());
}

TEST_CASE("integer factorization incl. pollard rho") {
  auto fac = factor_integer(Integer(2 * 2 * 2 * 9 * 17));
  REQUIRE(fac.size() == 3);
  CHECK(fac[0] == std::pair<Integer, int>(2, 3));
  CHECK(fac[1] == std::pair<Integer, int>(3, 2));
  CHECK(fac[2] == std::pair<Integer, int>(17, 1));
  // semiprime beyond the trial-division bound
  Integer p("1000003"), q("1000033");
  auto fac2 = factor_integer(p * q);
  REQUIRE(fac2.size() == 2);
  CHECK(fac2[0].first == p);
  CHECK(fac2[1].first == q);
  CHECK(positive_divisors(Integer(12)).size() == 6);
}

TEST_CASE("field validation") {
  // monic required
  CHECK_THROWS_AS(Field({Rational(1), Rational(2)}), ValidationError);
  // rational root: x^2 - 1
  CHECK_THROWS_AS(Field({Rational(-1), Rational(0), Rational(1)}),
                  ValidationError);
  // not squarefree: (x^2+1)^2
  CHECK_THROWS_AS(
      Field({Rational(1), Rational(0), Rational(2), Rational(0), Rational(1)}),
      ValidationError);
  // fine: x^2 + 1
  Field gauss = make_gauss();
  CHECK(gauss.degree() == 2);
  CHECK(!gauss.irreducibility_trusted());
  // x^4 + x + 1: squarefree, no rational root, trusted beyond degree 3
  Field quartic({Rational(1), Rational(1), Rational(0), Rational(0),
                 Rational(1)});
  CHECK(quartic.irreducibility_trusted());
  CHECK(Field::rationals().degree() == 1);
}

TEST_CASE("scalar arithmetic satisfies field axioms on random triples") {
  std::vector<Field> fields;
  fields.push_back(Field({Rational(0), Rational(1)}));
  fields.push_back(make_gauss());
  fields.push_back(
      Field({Rational(-2), Rational(0), Rational(0), Rational(1)}));  // x^3-2
  std::mt19937_64 rng(7);
  for (const Field& f : fields) {
    for (int trial = 0; trial < 40; ++trial) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng),
             c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == f.one());
        CHECK((a / a) == f.one());
      }
    }
  }
}

TEST_CASE("extension arithmetic is modular") {
  Field gauss = make_gauss();
  Scalar i = gauss.generator();
  CHECK(i * i == gauss.from_int(-1));
  Scalar one_plus_i = gauss.from_coords({Rational(1), Rational(1)});
  Scalar inv = one_plus_i.inverse();
  CHECK(inv == gauss.from_coords({Rational(1, 2), Rational(-1, 2)}));
  CHECK(one_plus_i * inv == gauss.one());
  CHECK_THROWS_AS(gauss.zero().inverse(), NotInvertible);
}

TEST_CASE("null zero interoperates") {
  Field gauss = make_gauss();
  Scalar z;  // field-agnostic zero
  CHECK(z.is_zero());
  CHECK(z + gauss.one() == gauss.one());
  CHECK((z * gauss.generator()).is_zero());
  CHECK(z == gauss.zero());
}

TEST_CASE("scalar_compare is a total order refinement") {
  Field q = Field::rationals();
  CHECK(scalar_compare(q.from_int(1), q.from_int(2)) < 0);
  CHECK(scalar_compare(q.from_int(2), q.from_int(2)) == 0);
  Field gauss = make_gauss();
  CHECK(scalar_compare(gauss.one(), gauss.generator()) != 0);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("poly");

TEST_CASE("division, gcd, lcm") {
  const Field& q = Field::rationals();
  Poly a = Poly::from_rationals(&q, {-1, 0, 1});      // y^2 - 1
  Poly b = Poly::from_rationals(&q, {-1, 0, 0, 1});   // y^3 - 1
  Poly g = poly_gcd(a, b);
  CHECK(g == Poly::from_rationals(&q, {-1, 1}));  // y - 1
  auto [quot, rem] = b.divmod(g);
  CHECK(rem.is_zero());
  CHECK(quot * g == b);
  Poly l = poly_lcm(a, b);
  CHECK(l.degree() == 4);
  CHECK(l.divmod(a).second.is_zero());
  CHECK(l.divmod(b).second.is_zero());
}

TEST_CASE("rational roots with denominator and large-factor paths") {
  const Field& q = Field::rationals();
  // (y - 2)(2y + 3)(y^2 + 1)
  Poly p = Poly::from_rationals(&q, {-2, 0, -1, 0, 1}) ;
  p = Poly::from_rationals(&q, {-2, 1}) * Poly::from_rationals(&q, {3, 2}) *
      Poly::from_rationals(&q, {1, 0, 1});
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(to_string(roots[0]) == "-3/2");
  CHECK(to_string(roots[1]) == "2");
  // roots at zero are reported per multiplicity
  Poly z = Poly::from_rationals(&q, {0, 0, 1});
  CHECK(rational_roots(z) == std::vector<Rational>{0, 0});
}

TEST_CASE("roots_in_field over Q") {
  const Field& q = Field::rationals();
  Poly split = Poly::from_rationals(&q, {-1, 1}) *
               Poly::from_rationals(&q, {-2, 1}) *
               Poly::from_rationals(&q, {-3, 1});
  RootSplit rs = roots_in_field(split);
  CHECK(rs.full_split());
  REQUIRE(rs.roots.size() == 3);
  Poly stuck = Poly::from_rationals(&q, {1, 0, 1});
  RootSplit rs2 = roots_in_field(stuck);
  CHECK(!rs2.full_split());
  CHECK(rs2.nonsplit->degree() == 2);
  CHECK_THROWS_AS(roots_in_field(Poly::from_rationals(&q, {1, -2, 1})),
                  ValidationError);  // (y-1)^2 not squarefree
}

TEST_CASE("roots_in_field over a quadratic extension") {
  Field gauss({Rational(1), Rational(0), Rational(1)});
  Poly p = Poly::from_rationals(&gauss, {1, 0, 1});  // y^2 + 1
  RootSplit rs = roots_in_field(p);
  REQUIRE(rs.full_split());
  REQUIRE(rs.roots.size() == 2);
  CHECK(rs.roots[0] * rs.roots[0] == gauss.from_int(-1));
  // the quadratic the cm datum produces: y^2 - 10y + 169 = (y-5)^2 + 144
  Poly cmq = Poly::from_rationals(&gauss, {169, -10, 1});
  RootSplit rs2 = roots_in_field(cmq);
  REQUIRE(rs2.full_split());
  Scalar five_plus_12i = gauss.from_coords({Rational(5), Rational(12)});
  CHECK((rs2.roots[0] == five_plus_12i || rs2.roots[1] == five_plus_12i));
  // y^2 - 3 does not split in Q(i)
  Poly nosplit = Poly::from_rationals(&gauss, {-3, 0, 1});
  CHECK(!roots_in_field(nosplit).full_split());
}

TEST_CASE("square roots in quadratic fields") {
  Field gauss({Rational(1), Rational(0), Rational(1)});
  // rational target: -4 = (2i)^2
  auto s = sqrt_in_field(gauss, gauss.from_int(-4));
  REQUIRE(s.has_value());
  CHECK(*s * *s == gauss.from_int(-4));
  // non-rational target: 2i = (1+i)^2
  Scalar two_i = gauss.from_coords({Rational(0), Rational(2)});
  auto t = sqrt_in_field(gauss, two_i);
  REQUIRE(t.has_value());
  CHECK(*t * *t == two_i);
  CHECK(!sqrt_in_field(gauss, gauss.from_int(3)).has_value());
  // Q(sqrt(-5)): sqrt(-5) itself
  Field qs5({Rational(5), Rational(0), Rational(1)});
  auto u = sqrt_in_field(qs5, qs5.from_int(-5));
  REQUIRE(u.has_value());
  CHECK(*u * *u == qs5.from_int(-5));
}

TEST_CASE("polynomial evaluation and deflation") {
  const Field& q = Field::rationals();
  Poly p = Poly::from_rationals(&q, {-6, 11, -6, 1});  // (y-1)(y-2)(y-3)
  CHECK(p.eval(q.from_int(2)).is_zero());
  Poly d = p.deflate(q.from_int(2));
  CHECK(d.eval(q.from_int(1)).is_zero());
  CHECK(d.eval(q.from_int(3)).is_zero());
  CHECK(d.degree() == 2);
}

TEST_SUITE_END();
