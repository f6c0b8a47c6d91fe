#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace g2calc {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parses "3", "-3/2", "+7", "0.25" (decimal literals are converted exactly).
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

inline bool is_one(const Rational& value) { return value == 1; }

}  // namespace g2calc
