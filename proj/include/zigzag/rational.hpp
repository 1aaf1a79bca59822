#pragma once

#include <gmpxx.h>

#include <string>

namespace zigzag {

// All likelihoods and arc weights are exact rationals; ordering and tie
// detection never go through floating point.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses a weight literal: either a decimal ("0.25", "1", ".5") or a
// fraction ("1/4"). Throws std::invalid_argument on malformed input or a
// value outside (0, 1].
Rational parse_weight(const std::string& text);

// Exact fraction string, e.g. "3/8" (or "1" for integers).
std::string to_fraction_string(const Rational& q);

// Decimal string with the given number of significant digits in
// normalized scientific form, e.g. "7.81250000000e-03".
std::string to_decimal_string(const Rational& q, int significant_digits = 12);

}  // namespace zigzag
