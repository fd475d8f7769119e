#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ksym {

// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
// with a positive denominator; values built from text go through
// parse_rational, which canonicalizes.
using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading sign. Throws ParseError on
// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace ksym
