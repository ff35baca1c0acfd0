#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace skeldet {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const BigInt& value);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt ipow(const BigInt& base, unsigned long exponent);

/// base^exponent for any integer exponent; a negative exponent needs a
/// nonzero base (std::domain_error otherwise). 0^0 = 1.
Rational rpow(const Rational& base, long exponent);

inline BigInt from_u64(std::uint64_t value) {
  return BigInt(static_cast<unsigned long>(value));
}

/// Converts to a machine word, throwing std::overflow_error when it does not fit.
std::uint64_t to_u64(const BigInt& value);
std::int64_t to_i64(const BigInt& value);

}  // namespace skeldet
