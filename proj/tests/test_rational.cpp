#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "toroidal/coeff.hpp"

using namespace toroidal;

TEST(Rational, ReducesAndNormalizesSign) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(-1, 2).str(), "-1/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_TRUE(Rational(0, 5).is_zero());
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("7/2"), Rational(7, 2));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, PromotesAndDemotes) {
  Rational big(std::numeric_limits<long long>::max());
  big *= Rational(std::numeric_limits<long long>::max());
  EXPECT_TRUE(big.is_big());
  Rational back = big / Rational(std::numeric_limits<long long>::max());
  EXPECT_FALSE(back.is_big());
  EXPECT_EQ(back, Rational(std::numeric_limits<long long>::max()));
}

// Inline arithmetic must agree with GMP on random operands, including overflow.
TEST(Rational, MatchesGmpOnRandomOperands) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> small(-1000, 1000);
  std::uniform_int_distribution<long long> huge(-(1LL << 62), 1LL << 62);
  for (int t = 0; t < 2000; ++t) {
    auto pick = [&] { return t % 3 == 0 ? huge(rng) : small(rng); };
    long long an = pick(), ad = pick(), bn = pick(), bd = pick();
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 3;
    const Rational a(an, ad), b(bn, bd);
    const mpq_class qa = a.to_mpq(), qb = b.to_mpq();
    EXPECT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
    EXPECT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
    EXPECT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
    if (!b.is_zero())
      EXPECT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
    EXPECT_EQ(a < b, qa < qb);
    // canonical representation: the round trip through GMP is structurally equal
    EXPECT_EQ(Rational((a * b).to_mpq()), a * b);
  }
}

TEST(Coeff, FieldOperations) {
  const Coeff s = Coeff::sqrt2();
  EXPECT_EQ(s * s, Coeff(2));
  EXPECT_EQ(Coeff::inv_sqrt2() * s, Coeff(1));
  const Coeff x(Rational(1, 2), Rational(-3));
  EXPECT_EQ(x / x, Coeff(1));
  EXPECT_EQ((x * x.conjugate()).sqrt2_part(), Rational(0));
  EXPECT_EQ(x.norm(), Rational(1, 4) - Rational(18));
  EXPECT_THROW(Coeff(1) / Coeff(), std::domain_error);
}

TEST(Coeff, Printing) {
  EXPECT_EQ(Coeff().str(), "0");
  EXPECT_EQ(Coeff::sqrt2().str(), "sqrt2");
  EXPECT_EQ((-Coeff::inv_sqrt2()).str(), "-1/2*sqrt2");
  EXPECT_EQ(Coeff(Rational(1, 2), Rational(-3)).str(), "1/2 - 3*sqrt2");
}
