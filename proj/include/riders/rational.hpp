#pragma once

// Exact arithmetic carriers. Every coordinate, bound and LP entry in the
// library is one of these; nothing on a decision path touches floating point.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace riders {

/// Arbitrary-precision rational, always reduced with a positive denominator.
using Rational = mpq_class;
/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Parses "7", "-3/4" or "1.25". Result is canonical.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "289/2" for non-integers, "289" for integers.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Exact decimal rendering when the reduced denominator has no prime factors
/// besides 2 and 5 ("144.5"); otherwise the fraction string.
std::string to_decimal_string(const Rational& value);

/// True when to_decimal_string yields a terminating decimal.
bool has_terminating_decimal(const Rational& value);

int sign(const Rational& value);

Integer factorial(unsigned n);

}  // namespace riders
