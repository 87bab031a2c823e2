#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toyscatter/rational.hpp"

namespace toyscatter {
namespace {

using testing::r;

TEST(Rational, ParsesIntegersFractionsAndDecimalsExactly) {
  EXPECT_EQ(Rational::parse("30"), r(30));
  EXPECT_EQ(Rational::parse("3/7"), r(3, 7));
  EXPECT_EQ(Rational::parse("6/14"), r(3, 7));
  EXPECT_EQ(Rational::parse("0.9"), r(9, 10));
  EXPECT_EQ(Rational::parse("-2.50"), r(-5, 2));
  EXPECT_EQ(Rational::parse(".5"), r(1, 2));
  EXPECT_EQ(Rational::parse("1.25e-3"), r(1, 800));
  EXPECT_EQ(Rational::parse("2E2"), r(200));
  EXPECT_EQ(Rational::parse(" 7 "), r(7));
}

TEST(Rational, DecimalOneTenthIsNotABinaryApproximation) {
  const Rational tenth = Rational::parse("0.1");
  EXPECT_EQ(tenth.numerator(), 1);
  EXPECT_EQ(tenth.denominator(), 10);
  EXPECT_EQ(Rational::from_double_text(0.1), tenth);
  EXPECT_EQ(Rational::from_double_text(0.0526317), r(526317, 10000000));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1.2.3", "1e", "--1", "3/-4", "0x10", "1/2/3"}) {
    EXPECT_THROW(Rational::parse(bad), InvalidInput) << bad;
  }
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(r(1) / r(0), std::domain_error);
  EXPECT_THROW(r(0).reciprocal(), std::domain_error);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST(Rational, StaysInLowestTermsWithPositiveDenominator) {
  const Rational x = Rational(BigInt(4), BigInt(-6));
  EXPECT_EQ(x.numerator(), -2);
  EXPECT_EQ(x.denominator(), 3);
  const Rational y = r(1, 6) + r(1, 3);
  EXPECT_EQ(y.numerator(), 1);
  EXPECT_EQ(y.denominator(), 2);
}

TEST(Rational, FieldRoundTripsOnRandomValues) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const Rational a(BigInt(num(rng)), BigInt(den(rng)));
    const Rational b(BigInt(num(rng)), BigInt(den(rng)));
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(gcd(::abs(a.numerator()), a.denominator()), 1);
    EXPECT_GT(a.denominator(), 0);
  }
}

TEST(Rational, FractionAndStringForms) {
  EXPECT_EQ(r(270, 539).fraction(), "270/539");
  EXPECT_EQ(r(1).fraction(), "1/1");
  EXPECT_EQ(r(1).str(), "1");
  EXPECT_EQ(r(-3, 4).str(), "-3/4");
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(r(270, 539).decimal(12), "0.500927643785");
  EXPECT_EQ(r(1, 2).decimal(12), "0.500000000000");
  EXPECT_EQ(r(1).decimal(12), "1.00000000000");
  EXPECT_EQ(r(1, 19).decimal(12), "0.0526315789474");
  EXPECT_EQ(r(0).decimal(12), "0.00000000000");
  EXPECT_EQ(r(0).decimal(1), "0");
  EXPECT_EQ(r(-2, 3).decimal(4), "-0.6667");
  EXPECT_EQ(r(123456).decimal(3), "123000");
  EXPECT_EQ(r(99999, 100000).decimal(3), "1.00");
  EXPECT_EQ(r(1, 3000).decimal(2), "0.00033");
}

TEST(Rational, Powers) {
  EXPECT_EQ(r(2, 3).pow(3), r(8, 27));
  EXPECT_EQ(r(2, 3).pow(-2), r(9, 4));
  EXPECT_EQ(r(5).pow(0), r(1));
  EXPECT_THROW(r(0).pow(-1), std::domain_error);
}

TEST(Rational, BinomialMatchesPascal) {
  for (unsigned long n = 0; n < 25; ++n) {
    for (unsigned long k = 0; k <= n + 1; ++k) EXPECT_EQ(binomial(n, k), testing::pascal(n, k)) << n << "," << k;
  }
}

TEST(Rational, ScaledThreshold) {
  EXPECT_EQ(scaled_threshold_u64(r(1, 2)), std::uint64_t{1} << 63);
  EXPECT_EQ(scaled_threshold_u64(r(3, 4)), (std::uint64_t{3} << 62));
  EXPECT_EQ(scaled_threshold_u64(r(0)), 0U);
  // floor(2^64 / 3) = 0x5555...55
  EXPECT_EQ(scaled_threshold_u64(r(1, 3)), 0x5555555555555555ULL);
  EXPECT_THROW(scaled_threshold_u64(r(1)), std::domain_error);
}

}  // namespace
}  // namespace toyscatter
