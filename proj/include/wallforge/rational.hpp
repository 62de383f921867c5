#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "wallforge/errors.hpp"

namespace wallforge {

// Every quantity in the engine is an exact integer or an exact rational.
// Floating point exists only in the SVG presentation layer.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Strict integer literal: optional sign followed by digits.  Anything else
/// (whitespace, decimal points, exponents) is a parse error.
Int parse_int(std::string_view text);

/// Strict rational literal `p` or `p/q` with an unsigned positive q.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Int& n);

int sgn(const Rational& r);
int sgn(const Int& n);

bool is_integer(const Rational& r);
bool is_half_integer(const Rational& r);  // 2r integral

/// Largest integer <= r.
Int floor_rat(const Rational& r);

/// Floor division, exact for all sign combinations (b != 0).
Int floor_div(const Int& a, const Int& b);

/// Floor square root of a nonnegative integer.
Int isqrt(const Int& n);

/// Converts to int64 for interchange layers; throws on overflow.
long long to_int64(const Int& n);

/// Rational with exact integer value, as an Int; throws otherwise.
Int to_int_exact(const Rational& r);

}  // namespace wallforge
