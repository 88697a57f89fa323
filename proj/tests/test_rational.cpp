#include <gtest/gtest.h>

#include <limits>
#include <sstream>

#include "gen.hpp"
#include "td/rational.hpp"

using td::Rational;

namespace {

constexpr int kIterations = 400;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, -7).str(), "0");
  EXPECT_EQ(Rational(10, 5), Rational(2));
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_EQ(Rational(-3, 9).denominator_str(), "3");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-5/2"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("+4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  for (const char* bad : {"", "1.5", "a", "1/", "/2", "1/-2", "--1"})
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  std::ostringstream os;
  os << Rational(-1, 3);
  EXPECT_EQ(os.str(), "-1/3");
}

TEST(Rational, OverflowPromotesAndDemotes) {
  const Rational big(std::numeric_limits<long long>::max());
  const Rational sq = big * big;
  EXPECT_EQ(sq.str(), "85070591730234615847396907784232501249");
  EXPECT_EQ(sq / big, big);
  EXPECT_EQ((big + Rational(1)) - Rational(1), big);
  EXPECT_EQ(Rational(std::numeric_limits<long long>::min()).str(), "-9223372036854775808");
  EXPECT_EQ(-Rational(std::numeric_limits<long long>::min()), big + Rational(1));
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  const Rational big = Rational::parse("100000000000000000000000");
  EXPECT_LT(Rational(7), big);
  EXPECT_LT(-big, Rational(-7));
  EXPECT_EQ(big.sign(), 1);
  EXPECT_EQ((-big).sign(), -1);
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(td::factorial(0), Rational(1));
  EXPECT_EQ(td::factorial(5), Rational(120));
  EXPECT_EQ(td::factorial(25).str(), "15511210043330985984000000");
  EXPECT_EQ(td::binomial(4, 2), Rational(6));
  EXPECT_EQ(td::binomial(3, 5), Rational(0));
}

TEST(RationalProperty, FieldAxioms) {
  gen::Gen g(11);
  for (int i = 0; i < kIterations; ++i) {
    const Rational a = g.wide_rational(), b = g.wide_rational(), c = g.wide_rational();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c) << a << " " << b << " " << c;
    EXPECT_EQ(a - a, Rational(0));
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
      EXPECT_EQ(b * b.reciprocal(), Rational(1));
    }
  }
}

TEST(RationalProperty, PrintParseRoundTrip) {
  gen::Gen g(12);
  for (int i = 0; i < kIterations; ++i) {
    const Rational a = g.wide_rational();
    EXPECT_EQ(Rational::parse(a.str()), a);
  }
}

TEST(RationalProperty, OrderIsCompatibleWithAddition) {
  gen::Gen g(13);
  for (int i = 0; i < kIterations; ++i) {
    const Rational a = g.wide_rational(), b = g.wide_rational(), c = g.wide_rational();
    EXPECT_EQ(a < b, a + c < b + c);
    EXPECT_EQ((a - b).sign(), a < b ? -1 : (a == b ? 0 : 1));
  }
}

}  // namespace
