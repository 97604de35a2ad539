#include <gtest/gtest.h>

#include "test_util.hpp"
#include "toroidal/expr.hpp"

using namespace toroidal;
using L = AtomicLabel;

TEST(Expr, ParsesMonomialsAndScalars) {
  const auto b3 = build_lattice(AlgType::B, 3);
  EXPECT_EQ(parse_local_field(":eps(1) eps*(2):", b3), LocalField::mono(L::eps(1), L::eps_star(2)));
  EXPECT_EQ(parse_local_field("sqrt2 :eps(3) e:", b3), LocalField::mono(L::eps(3), L::ghost(), Coeff::sqrt2()));
  EXPECT_EQ(parse_local_field("1/2*sqrt2*:eps(3) e: - 3", b3),
            LocalField::mono(L::eps(3), L::ghost(), Coeff::inv_sqrt2()) - LocalField::identity(3));
  EXPECT_EQ(parse_local_field("-(:eps(1) eps*(1): - :eps(2) eps*(2):)", b3),
            LocalField::mono(L::eps(2), L::eps_star(2)) - LocalField::mono(L::eps(1), L::eps_star(1)));
  EXPECT_EQ(parse_local_field(":beta* eps*(2):", b3),
            normal_quad(beta_field(b3, true), L::eps_star(2)));
  EXPECT_TRUE(parse_local_field(":e e:", b3).is_zero());
  EXPECT_EQ(parse_coeff("1/2 + 3/4*sqrt2"), Coeff(Rational(1, 2), Rational(3, 4)));
}

TEST(Expr, Errors) {
  const auto b3 = build_lattice(AlgType::B, 3);
  EXPECT_THROW(parse_local_field(":epsbar(1) eps(1):", b3), ParseError);
  EXPECT_THROW(parse_local_field(":betabar eps(1):", b3), ParseError);
  EXPECT_THROW(parse_local_field(":eps(4) eps(1):", b3), ParseError);
  EXPECT_THROW(parse_local_field(":eps(1) eps(2): :eps(3) e:", b3), ParseError);
  EXPECT_THROW(parse_local_field(":eps(1) eps(2)", b3), ParseError);
  EXPECT_THROW(parse_local_field("1/0", b3), ParseError);
  try {
    parse_local_field(":eps(1) foo:", b3);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.position(), 8u);
  }
}

TEST(Expr, Printing) {
  const auto a3 = build_lattice(AlgType::A, 3);
  const auto r = bracket(Pairing(a3), parse_local_field(":eps(1) eps*(2):", a3),
                         parse_local_field(":eps*(1) eps(2):", a3));
  EXPECT_EQ(to_expr(r), "delta: -:eps(1) eps*(1): + :eps(2) eps*(2):, d_delta: -1");
  EXPECT_EQ(to_expr(LocalField()), "0");
  EXPECT_EQ(to_expr(BracketResult{}), "0");
  const LocalField f = LocalField::mono(L::eps(1), L::eps(2), Coeff(Rational(1), Rational(-1)));
  EXPECT_EQ(to_expr(f), "(1 - sqrt2)*:eps(1) eps(2):");
}

TEST(Expr, RoundTrip) {
  std::mt19937_64 rng(5);
  for (auto [t, n] : {std::pair{AlgType::B, 3}, std::pair{AlgType::C, 3}}) {
    const auto ctx = build_lattice(t, n);
    for (int k = 0; k < 200; ++k) {
      LocalField f = testutil::random_field(ctx.alphabet(), rng, 4);
      f.add_identity(testutil::random_coeff(rng));
      EXPECT_EQ(parse_local_field(to_expr(f), ctx), f) << to_expr(f);
    }
  }
}
