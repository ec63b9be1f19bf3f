#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace picardlab {

using Integer = mpz_class;
using Rational = mpq_class;

// num/den in lowest terms (mpq_class(num, den) alone does not reduce).
Rational ratio(const Integer& num, const Integer& den);

bool is_perfect_square(const Integer& value);

// "p" for integral values, "p/q" otherwise.
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// Decimal rendering with a fixed number of fractional digits (presentation only).
std::string to_decimal(const Rational& value, int digits);

Rational parse_rational(const std::string& text);

// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& value);

inline Integer abs_value(const Integer& v) { return Integer(abs(v)); }
inline Rational abs_value(const Rational& v) { return Rational(abs(v)); }

}  // namespace picardlab
