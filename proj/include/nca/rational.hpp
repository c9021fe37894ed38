#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace nca {

// Exact rational in lowest terms with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q", an integer, or a decimal such as "-0.125" or "2.5e-3"
/// into an exact rational. Throws nca::Error on malformed text.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

double to_double(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

/// Number of bits in the binary expansion of a positive integer.
std::size_t bit_length(const BigInt& value);

/// If `value` is an integer that fits comfortably in 62 bits, stores it.
bool small_integer(const Rational& value, std::int64_t& out);

}  // namespace nca
