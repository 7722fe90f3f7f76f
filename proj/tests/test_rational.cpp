#include <gtest/gtest.h>

#include <stdexcept>

#include "twomode/rational.hpp"

namespace twomode {
namespace {

TEST(RationalTest, CanonicalForm) {
  EXPECT_EQ(Rational(6, -8).str(), "-3/4");
  EXPECT_EQ(Rational(10, 5).str(), "2");
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_EQ(Rational(-6, -8).denominator(), "4");
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  Rational x(1, 2);
  EXPECT_THROW(x /= Rational(0), std::domain_error);
  EXPECT_THROW(reciprocal(0), std::domain_error);
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(reciprocal(12), Rational(1, 12));
}

TEST(RationalTest, DecimalRoundsHalfAwayFromZero) {
  EXPECT_EQ(Rational(1, 8).to_decimal(2), "0.13");
  EXPECT_EQ(Rational(-1, 8).to_decimal(2), "-0.13");
  EXPECT_EQ(Rational(1, 3).to_decimal(4), "0.3333");
  EXPECT_EQ(Rational(2, 3).to_decimal(4), "0.6667");
  EXPECT_EQ(Rational(1, 180).to_decimal(4), "0.0056");
  EXPECT_EQ(Rational(-1, 9).to_decimal(4), "-0.1111");
  EXPECT_EQ(Rational(-1, 1000).to_decimal(2), "0.00");
  EXPECT_EQ(Rational(7, 2).to_decimal(0), "4");
  EXPECT_EQ(Rational(3).to_decimal(3), "3.000");
}

TEST(RationalTest, StringRoundTrip) {
  const Rational x(-163883, 498168);
  EXPECT_EQ(Rational::from_strings(x.numerator(), x.denominator()), x);
  EXPECT_EQ(Rational::from_strings("10", "-4"), Rational(-5, 2));
  EXPECT_THROW(Rational::from_strings("1", "0"), std::domain_error);
  EXPECT_THROW(Rational::from_strings("x", "1"), std::invalid_argument);
}

TEST(RationalTest, ToDouble) {
  EXPECT_DOUBLE_EQ(Rational(19, 105).to_double(), 19.0 / 105.0);
  EXPECT_EQ(Rational(-3, 4).sign(), -1);
  EXPECT_EQ(Rational(0).sign(), 0);
}

}  // namespace
}  // namespace twomode
