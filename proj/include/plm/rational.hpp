#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plm {

/// Exact rational, always kept in canonical form (reduced, positive
/// denominator).
using Rational = mpq_class;

/// Accepts "p/q", an integer, or a decimal "a.b" (read exactly as p/10^k),
/// each with an optional sign. Throws ParseError (line 0) on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace plm
