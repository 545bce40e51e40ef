#include <charnum/rational.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace charnum {
namespace {

TEST(Rational, NormalizeReducesByGcd) {
  const Rational r = rat_normalize(2, 4);
  EXPECT_EQ(r.numerator(), 1);
  EXPECT_EQ(r.denominator(), 2);
}

TEST(Rational, NormalizeMovesSignToNumerator) {
  const Rational r = rat_normalize(3, -6);
  EXPECT_EQ(r.numerator(), -1);
  EXPECT_EQ(r.denominator(), 2);
}

TEST(Rational, NormalizeZero) {
  const Rational r = rat_normalize(0, 7);
  EXPECT_EQ(r.numerator(), 0);
  EXPECT_EQ(r.denominator(), 1);
  EXPECT_TRUE(r.is_zero());
}

TEST(Rational, ZeroDenominatorThrows) {
  try {
    (void)rat_normalize(1, 0);
    FAIL() << "expected a throw";
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "division by zero");
  }
  EXPECT_THROW((void)(Rational(1) / Rational(0)), std::domain_error);
  EXPECT_THROW((void)Rational(0).inverse(), std::domain_error);
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("+4/2"), Rational(2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"", "1.5", "1/", "/2", "a", "1/-2", "1//2", " 1", "--1", "1e3"}) {
    EXPECT_THROW((void)Rational::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW((void)Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, StreamsCanonicalForm) {
  std::ostringstream os;
  os << Rational(6, -4) << " " << Rational(5);
  EXPECT_EQ(os.str(), "-3/2 5");
}

TEST(Rational, OrderingAndSign) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(2, 3), Rational(3, 5));
  EXPECT_EQ(Rational(-2, 3).sign(), -1);
  EXPECT_EQ(Rational(-2, 3).abs(), Rational(2, 3));
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, PowerAndInverse) {
  EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
  EXPECT_EQ(Rational(-3, 7).inverse(), Rational(-7, 3));
}

// Field axioms on random values: exact arithmetic means these hold with ==.
TEST(RationalProperty, FieldIdentities) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int t = 0; t < 500; ++t) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    // Canonical at rest.
    const Rational s = a + b;
    EXPECT_GT(s.denominator(), 0);
    EXPECT_EQ(gcd(abs(s.numerator()), s.denominator()), 1);
  }
}

// Independent check of addition: compare with cross-multiplied integers.
TEST(RationalProperty, SumMatchesCrossMultiplication) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> num(-50000, 50000), den(1, 50000);
  for (int t = 0; t < 500; ++t) {
    const long p = num(rng), q = den(rng), r = num(rng), s = den(rng);
    const Rational sum = Rational(p, q) + Rational(r, s);
    EXPECT_EQ(sum.numerator() * (Integer(q) * s), (Integer(p) * s + Integer(r) * q) * sum.denominator());
  }
}

TEST(MakePrimitive, ScalesToCoprimeIntegers) {
  std::vector<Rational> v{Rational(-1, 2), Rational(3, 4), 0};
  make_primitive(v);
  EXPECT_EQ(v, (std::vector<Rational>{2, -3, 0}));
  std::vector<Rational> z{0, 0};
  make_primitive(z);
  EXPECT_EQ(z, (std::vector<Rational>{0, 0}));
  std::vector<Rational> w{0, Rational(-6), Rational(4)};
  make_primitive(w);
  EXPECT_EQ(w, (std::vector<Rational>{0, 3, -2}));
}

}  // namespace
}  // namespace charnum
