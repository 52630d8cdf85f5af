#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eitrace {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

/// Accepts "p", "p/q" and "-p/q". Throws ParseError on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written with denominator 1.
std::string format_rational(const Rational& value);

} // namespace eitrace
