#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ek {

// Exact arithmetic everywhere: construction coordinates (powers of two,
// eps = 1/2) and dyadic angles must compare without rounding.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a bare integer "p". Denominator must be a positive
// integer; the result is reduced to canonical form. Throws InputError.
Rational parse_rational(const std::string& text);

// Canonical "p/q" form, denominator always present ("3" -> "3/1").
std::string rational_to_string(const Rational& r);

// Bits needed for |x|; bit_length(0) == 0.
int bit_length(const BigInt& x);

// max(bit_length(numerator), bit_length(denominator)).
int coordinate_bit_length(const Rational& r);

}  // namespace ek
