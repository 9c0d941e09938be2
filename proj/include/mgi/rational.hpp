#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mgi {

using Integer = mpz_class;
// mpq_class keeps values in lowest terms with a positive denominator as
// long as every value is built through canonicalizing constructors; the
// helpers below never hand out a non-canonical value.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q", "p", with optional leading '-'. Throws Error(Parse).
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Decimal rendering with `digits` significant digits. Display only.
std::string to_decimal(const Rational& value, int digits = 12);

long double to_long_double(const Rational& value);

Rational abs(const Rational& value);

}  // namespace mgi
