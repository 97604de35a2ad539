#include <gtest/gtest.h>

#include "test_util.hpp"
#include "toroidal/root_data.hpp"

using namespace toroidal;
using LV = LatticeVector;

namespace {

const std::vector<std::pair<AlgType, int>> kConfigs = {
    {AlgType::A, 2}, {AlgType::A, 3}, {AlgType::A, 4}, {AlgType::B, 2}, {AlgType::B, 3},
    {AlgType::B, 4}, {AlgType::C, 2}, {AlgType::C, 3}, {AlgType::C, 4}, {AlgType::D, 4}, {AlgType::D, 5}};

std::vector<Coeff> coeffs(std::initializer_list<Rational> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST(RootData, RankConstraints) {
  EXPECT_THROW(build_lattice(AlgType::D, 3), ConfigError);
  EXPECT_THROW(build_lattice(AlgType::A, 1), ConfigError);
  EXPECT_THROW(build_lattice(AlgType::C, 1), ConfigError);
  EXPECT_NO_THROW(build_lattice(AlgType::D, 4));
  try {
    build_lattice(AlgType::D, 3);
  } catch (const ConfigError &e) {
    EXPECT_NE(std::string(e.what()).find("4"), std::string::npos);
  }
}

TEST(RootData, B3Alphabet) {
  const auto ctx = build_lattice(AlgType::B, 3);
  using L = AtomicLabel;
  const std::vector<L> want = {L::cbar(),      L::cbar_star(), L::eps(1),      L::eps_star(1), L::eps(2),
                               L::eps_star(2), L::eps(3),      L::eps_star(3), L::ghost()};
  EXPECT_EQ(ctx.alphabet(), want);
  EXPECT_EQ(ctx.beta(), LV::eps(1) - LV::cbar());
  EXPECT_FALSE(ctx.beta_bar());
}

TEST(RootData, C2Beta) {
  const auto ctx = build_lattice(AlgType::C, 2);
  EXPECT_EQ(ctx.beta(), LV::eps(1) - Coeff::sqrt2() * LV::cbar());
  ASSERT_TRUE(ctx.beta_bar());
  EXPECT_EQ(*ctx.beta_bar(), LV::eps_bar(1) - Coeff::sqrt2() * LV::cbar());
  EXPECT_TRUE(ctx.has_label(AtomicLabel::eps_bar_star(2)));
  EXPECT_FALSE(ctx.has_label(AtomicLabel::ghost()));
}

TEST(RootData, SimpleRootExamples) {
  const auto a2 = build_lattice(AlgType::A, 2);
  EXPECT_EQ(simple_root(a2, 0), LV::cbar() - LV::eps(1) + LV::eps(2));
  EXPECT_EQ(simple_root(a2, 0), LV::eps(2) - a2.beta());
  const auto c3 = build_lattice(AlgType::C, 3);
  EXPECT_EQ(simple_root(c3, 3), Coeff::sqrt2() * LV::eps(3));
  const auto d4 = build_lattice(AlgType::D, 4);
  EXPECT_EQ(simple_root(d4, 4), LV::eps(3) + LV::eps(4));
  EXPECT_THROW(simple_root(d4, 5), std::out_of_range);
  EXPECT_THROW(simple_root(a2, 2), std::out_of_range);
}

TEST(RootData, FormExamples) {
  EXPECT_EQ(form(LV::eps(1), LV::eps(2)), Coeff(0));
  EXPECT_EQ(form(LV::cbar(), LV::cbar()), Coeff(0));
  EXPECT_EQ(form(LV::cbar(), LV::dbar()), Coeff(1));
  const auto c2 = build_lattice(AlgType::C, 2);
  EXPECT_EQ(form(c2, simple_root(c2, 0), simple_root(c2, 0)), Coeff(2));
}

TEST(RootData, CartanEntryExamples) {
  const auto b3 = build_lattice(AlgType::B, 3);
  EXPECT_EQ(cartan_entry(b3, 3, 2), -2);
  const auto c2 = build_lattice(AlgType::C, 2);
  EXPECT_EQ(cartan_entry(c2, 0, 1), -1);
  EXPECT_EQ(cartan_entry(c2, 1, 0), -2);
  for (const auto &[t, n] : kConfigs) {
    const auto ctx = build_lattice(t, n);
    for (int i = 0; i < ctx.num_nodes(); ++i)
      EXPECT_EQ(cartan_entry(ctx, i, i), 2);
  }
}

TEST(RootData, MarksExamples) {
  EXPECT_EQ(null_root_marks(build_lattice(AlgType::A, 4)), (std::vector<long long>{1, 1, 1, 1}));
  EXPECT_EQ(null_root_marks(build_lattice(AlgType::C, 4)), (std::vector<long long>{1, 2, 2, 2, 1}));
  EXPECT_EQ(null_root_marks(build_lattice(AlgType::B, 2)), (std::vector<long long>{1, 1, 2}));
  EXPECT_EQ(null_root_marks(build_lattice(AlgType::D, 5)), (std::vector<long long>{1, 1, 2, 2, 1, 1}));
}

TEST(RootData, DVectorExamples) {
  EXPECT_EQ(d_vector(build_lattice(AlgType::B, 3)), coeffs({1, 1, 1, Rational(1, 2)}));
  EXPECT_EQ(d_vector(build_lattice(AlgType::C, 3)), coeffs({1, Rational(1, 2), Rational(1, 2), 1}));
  EXPECT_EQ(d_vector(build_lattice(AlgType::A, 3)), coeffs({1, 1, 1}));
}

TEST(RootData, Invariants) {
  for (const auto &[t, n] : kConfigs) {
    SCOPED_TRACE(std::string(1, to_char(t)) + std::to_string(n));
    const auto ctx = build_lattice(t, n);
    const int k = ctx.top_node();
    EXPECT_EQ(k, t == AlgType::A ? n - 1 : n);
    EXPECT_EQ(simple_root(ctx, 0), LV::cbar() - ctx.alpha_max());
    LV sum;
    const auto marks = null_root_marks(ctx);
    EXPECT_EQ(marks.front(), 1);
    for (int i = 0; i <= k; ++i)
      sum += Coeff(marks[static_cast<std::size_t>(i)]) * simple_root(ctx, i);
    EXPECT_EQ(sum, LV::cbar());
    const auto d = d_vector(ctx);
    for (int i = 0; i <= k; ++i) {
      EXPECT_EQ(form(LV::cbar(), simple_root(ctx, i)), Coeff(0));
      for (int j = 0; j <= k; ++j) {
        const long long a = cartan_entry(ctx, i, j);
        if (i != j)
          EXPECT_LE(a, 0);
        EXPECT_EQ(form(simple_root(ctx, i), simple_root(ctx, j)),
                  d[static_cast<std::size_t>(i)] * Coeff(a));
      }
    }
    EXPECT_EQ(form(ctx.beta(), ctx.beta()), Coeff(1));
    for (int i = 1; i <= n; ++i)
      EXPECT_EQ(form(ctx.beta(), LV::eps(i)), Coeff(i == 1 ? 1 : 0));
  }
}

TEST(RootData, SolveLinear) {
  auto x = solve_linear({{Coeff(1), Coeff::sqrt2()}, {Coeff(0), Coeff(2)}}, {Coeff(1), Coeff(4)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[1], Coeff(2));
  EXPECT_EQ((*x)[0], Coeff(1) - Coeff(2) * Coeff::sqrt2());
  EXPECT_FALSE(solve_linear({{Coeff(1), Coeff(1)}, {Coeff(2), Coeff(2)}}, {Coeff(1), Coeff(3)}));
}

TEST(RootData, LabelOrder) {
  using L = AtomicLabel;
  EXPECT_LT(L::cbar(), L::cbar_star());
  EXPECT_LT(L::cbar_star(), L::eps(1));
  EXPECT_LT(L::eps(1), L::eps_star(1));
  EXPECT_LT(L::eps_star(1), L::eps(2));
  EXPECT_LT(L::eps_star(9), L::eps_bar(1));
  EXPECT_LT(L::eps_bar_star(9), L::ghost());
  EXPECT_EQ(L::eps_star(3).str(), "eps*(3)");
  EXPECT_EQ(L::eps_bar(2).short_str(), "epsbar2");
}
