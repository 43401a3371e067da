#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gnm {

/// Exact rational scalar. mpq_class keeps numerator and denominator coprime
/// with a positive denominator as long as values come through parse_rational
/// or arithmetic (which canonicalizes).
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading sign, decimal digits only).
/// Throws MathError(ParseError) on anything else, including q == 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is one, else "p/q".
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

inline Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace gnm
