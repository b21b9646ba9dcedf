#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tvb {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// denominator > 0, zero is 0/1. No decision anywhere in the geometry kernel
// goes through floating point.
using Rational = mpq_class;

// A point in R^d with exact coordinates.
using Point = std::vector<Rational>;

// Parses "p/q" or a bare integer (optional leading '-'). Throws
// std::invalid_argument on malformed tokens or zero denominators.
Rational parse_rational(std::string_view token);

// Canonical text form: bare integer when the denominator is 1, else "p/q".
std::string format_rational(const Rational& q);

// Exact fixed-point decimal with `digits` fractional digits, rounded to
// nearest (ties away from zero). Pure integer arithmetic, so the output is
// reproducible byte for byte; used by the SVG writer.
std::string decimal_string(const Rational& q, int digits);

}  // namespace tvb
