#ifndef LEFDEC_RATIONAL_HPP
#define LEFDEC_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace lefdec {

/// Exact rational number. GMP keeps it reduced with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Canonical string form: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

/// Exact square root of a rational if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Prime factorization of |n| by trial division + Pollard rho.
/// Returns prime/multiplicity pairs; n must be nonzero.
std::vector<std::pair<Integer, int>> factor_integer(Integer n);

/// All positive divisors of |n|, unsorted order deterministic in the
/// factorization. Intended for rational-root candidate enumeration; callers
/// should keep |n| within reach of Pollard rho (practically < 2^128).
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace lefdec

#endif
