#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperchow {

/// Arbitrary-precision rational; always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on bad input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "p" or "p/q".
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

/// True when `value` is the square of a rational; writes the non-negative root.
bool rational_sqrt(const Rational& value, Rational& root);

}  // namespace hyperchow
