#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vcopy {

/// Arbitrary-precision rational; every coefficient in the engine is one of these.
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" (whitespace-free). Throws MalformedInput.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& value);

/// LaTeX rendering: integers as-is, fractions as \frac{p}{q} (sign in front).
std::string to_latex(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_one(const Rational& value) { return value == 1; }

}  // namespace vcopy
