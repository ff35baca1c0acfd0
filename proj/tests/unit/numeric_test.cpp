#include <gtest/gtest.h>

#include <stdexcept>

#include "skeldet/numeric.hpp"

namespace skeldet {
namespace {

TEST(Numeric, ParseAndPrintRoundTrip) {
  EXPECT_EQ(to_string(parse_bigint("-123456789012345678901234567890")),
            "-123456789012345678901234567890");
  EXPECT_EQ(parse_bigint("+7"), 7);
  EXPECT_THROW(parse_bigint("12a"), std::invalid_argument);
  EXPECT_THROW(parse_bigint(""), std::invalid_argument);
}

TEST(Numeric, RationalPrinting) {
  EXPECT_EQ(to_string(Rational(6, 3)), "2");
  EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
}

TEST(Numeric, Combinatorics) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(ipow(3, 4), 81);
  EXPECT_EQ(ipow(0, 0), 1);
}

TEST(Numeric, RationalPowers) {
  EXPECT_EQ(rpow(Rational(2), -2), Rational(1, 4));
  EXPECT_EQ(rpow(Rational(0), 0), 1);
  EXPECT_THROW(rpow(Rational(0), -1), std::domain_error);
}

TEST(Numeric, MachineWordConversions) {
  EXPECT_EQ(to_u64(from_u64(18446744073709551615ULL)), 18446744073709551615ULL);
  EXPECT_THROW(to_u64(BigInt(-1)), std::overflow_error);
  EXPECT_EQ(to_i64(BigInt(-5)), -5);
  EXPECT_THROW(to_i64(parse_bigint("9223372036854775808")), std::overflow_error);
}

}  // namespace
}  // namespace skeldet
