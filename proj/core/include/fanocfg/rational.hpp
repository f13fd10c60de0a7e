#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace fanocfg {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with a positive denominator. Throws DomainError
/// when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

/// Reads "a" or "a/b" (optional leading '-').
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Integer one_like(const Integer&) { return Integer(1); }
inline Integer zero_like(const Integer&) { return Integer(0); }

/// Prime factorisation of |n| (n != 0). Trial division by small primes;
/// a leftover cofactor that is not a probable prime is reported under its
/// own value, so the map always multiplies back to |n|.
std::map<Integer, unsigned> factor_integer(const Integer& n);

/// Inverse of factor_integer.
Integer multiply_factors(const std::map<Integer, unsigned>& factors);

} // namespace fanocfg
