#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypcomp {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator (gmpxx arithmetic preserves this; parse_rational canonicalizes).
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
// Integer power; negative exponents require a nonzero base.
Rational pow(const Rational& base, long exponent);
bool is_integer(const Rational& value);

}  // namespace hypcomp
