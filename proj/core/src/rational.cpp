#include "lefdec/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefdec {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  Integer num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

namespace {

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Integer pollard_rho(const Integer& n) {
  // n odd composite, not a perfect power of a found prime yet.
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Integer diff = x - y;
      if (sgn(diff) < 0) diff = -diff;
      if (sgn(diff) == 0) break;  // cycle; retry with new c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(Integer n, std::vector<std::pair<Integer, int>>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    for (auto& [p, e] : out)
      if (p == n) {
        ++e;
        return;
      }
    out.emplace_back(n, 1);
    return;
  }
  Integer d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  if (sgn(n) == 0) throw std::invalid_argument("factor_integer(0)");
  if (sgn(n) < 0) n = -n;
  std::vector<std::pair<Integer, int>> out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  // trial division up to 10^4 catches everything tiny before rho
  for (long p = 41; p < 10000 && n > 1; p += 2) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) factor_rec(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  auto fac = factor_integer(n);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : fac) {
    size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace lefdec
