#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rahman {

/// Arbitrary-precision rational, always in canonical lowest terms with a
/// positive denominator. All core math in this library is exact; floating
/// point appears only at the sampling/statistics boundary.
using Rational = mpq_class;

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws ParseError if den == 0.
Rational make_rational(long num, long den);

/// Accepts "123", "-7", "3/4", "-3/4". The denominator must be a positive
/// integer literal. Throws ParseError on anything else (including "3/0").
Rational parse_rational(std::string_view text);

/// Canonical serialization: always "num/den", so to_string(1) == "1/1".
std::string to_string(const Rational& q);

/// q^e with e >= 0; pow(q, 0) == 1 for every q, including q == 0.
Rational pow(const Rational& base, unsigned exponent);

Rational abs(const Rational& q);

/// Nearest double; used only by the simulator and CSV emission.
double to_double(const Rational& q);

Integer factorial(unsigned n);
Integer binomial_coefficient(unsigned n, unsigned k);

} // namespace rahman
