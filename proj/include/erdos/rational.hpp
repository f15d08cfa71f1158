#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "erdos/errors.hpp"

namespace erdos {

// Exact arbitrary-precision rational scalar. mpq_class keeps every value in
// lowest terms with a positive denominator, so equality is a field-wise
// compare and zero is always 0/1.
using Rational = mpq_class;
using BigInt = mpz_class;

using RatVector = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p" with an optional leading sign. Throws ParseError on
// anything else (including q = 0).
Rational parse_rational(const std::string& token);

// Renders as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

// lcm of the denominators of a range of rationals (all in lowest terms).
BigInt common_denominator(const RatVector& values);

}  // namespace erdos
