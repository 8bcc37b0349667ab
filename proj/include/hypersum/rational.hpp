#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypersum {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational scalar. Always kept canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "num/den" with an explicit denominator, e.g. "3/1", "-1/4".
std::string to_fraction_string(const Rational& q);

/// "num" when the value is an integer, otherwise "num/den".
std::string to_display_string(const Rational& q);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace hypersum
