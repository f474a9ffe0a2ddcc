#pragma once

#include <gmpxx.h>

#include <string>

namespace horadam {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact decimal parse of "12", "-0.125", "1e-20", "2.5E3" or "3/7".
/// Throws Error(InvalidArgument) on malformed input.
Rational parse_rational(const std::string& text);

/// `num/den` form, always with a denominator ("4/1" for integers).
std::string fraction_string(const Rational& value);

/// Decimal rendering rounded half-away-from-zero to `digits` fractional digits.
std::string decimal_string(const Rational& value, int digits);

/// 2^e as an exact rational; e may be negative.
Rational pow2(long e);

}  // namespace horadam
