#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lseries {

// Exact rational scalar. GMP keeps gcd(|num|, den) = 1 and den > 0 for every
// arithmetic result; external input goes through parse_rational so the same
// canonical form holds everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "n" or "n/d" with an optional leading minus, nothing else.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "n" or "n/d" form; inverse of parse_rational.
std::string to_string(const Rational& value);

// lcm of all denominators (1 for an empty list).
Integer lcm_denominators(const std::vector<Rational>& values);

// ceil(log2(|value|)) estimate, >= actual; 0 for value = 0.
long log2_bound(const Rational& value);

}  // namespace lseries
