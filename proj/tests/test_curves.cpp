#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace singchar;
using th::fp;
using th::q;

TEST(Nu, Examples) {
  EXPECT_EQ(blowup_nu(q("x4y+x2y2+y5")).nu, ExtNat(7));
  EXPECT_EQ(blowup_nu(q("y2+x3")).nu, ExtNat(1));
  EXPECT_EQ(blowup_nu(q("y2+x4")).nu, ExtNat(2));
  EXPECT_TRUE(blowup_nu(q("x2")).nu.is_infinite());
  EXPECT_FALSE(blowup_nu(q("x2")).tree.has_value());
}

TEST(Nu, TreeShape) {
  const auto r = blowup_nu(q("y2+x3"));
  ASSERT_TRUE(r.tree);
  EXPECT_EQ(r.tree->multiplicity, 2u);
  EXPECT_EQ(r.tree->chart, Chart::Root);
  ASSERT_EQ(r.tree->children.size(), 2u);
  EXPECT_EQ(r.tree->children[0].path, "x");
}

TEST(StrictTransform, Charts) {
  EXPECT_EQ(strict_transform(q("y2+x3"), Chart::X, 2), q("y2+x"));
  EXPECT_EQ(strict_transform(q("y2+x3"), Chart::Y, 2), q("1+x3y"));
}

TEST(Delta, Status) {
  const auto d = delta_invariant(fp(2, "(x-y)^2+x5"));
  EXPECT_EQ(d.value, ExtRational(1));
  EXPECT_EQ(d.status, BoundStatus::LowerBound);
  const auto r = branch_count(fp(2, "(x-y)^2+x5"));
  EXPECT_EQ(r.value, 2u);
  EXPECT_EQ(r.status, BoundStatus::UpperBound);
  EXPECT_EQ(delta_invariant(q("y2+x3")).status, BoundStatus::Exact);
}

TEST(MilnorFormula, Verdicts) {
  const auto a = milnor_formula_check(fp(2, "(x-y)^2+x5"));
  EXPECT_TRUE(a.mu.is_infinite());
  EXPECT_EQ(a.verdict, FormulaVerdict::InequalityOnly);
  EXPECT_TRUE(a.mu_at_least_rhs);

  const auto b = milnor_formula_check(fp(7, "y2+x3"));
  EXPECT_EQ(b.mu, ExtNat(2));
  EXPECT_EQ(b.verdict, FormulaVerdict::MilnorEquality);

  const auto c = milnor_formula_check(fp(2, "x6+y3+x5y"));
  EXPECT_EQ(c.mu, ExtNat(13));
  EXPECT_EQ(c.mu_n, ExtNat(10));
  EXPECT_EQ(c.verdict, FormulaVerdict::NewtonEquality);
}

TEST(MilnorFormula, MuAtLeastRhsOnRandomInputs) {
  Rng rng(21);
  for (std::uint64_t ch : {0, 2, 3, 5, 7}) {
    for (int i = 0; i < 40; ++i) {
      detail::with_field(ch, [&]<class K>(K) {
        const auto f = random_poly<K>(rng, th::ring(ch), {2, 6, 1, 7});
        const auto r = milnor_formula_check(f);
        EXPECT_TRUE(r.mu_at_least_mu_n) << format(f);
        EXPECT_TRUE(r.mu_at_least_rhs) << format(f);
        return 0;
      });
    }
  }
}

TEST(NuDeltaN, AgreeInCharacteristicZeroForNnd) {
  Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    const auto f = random_poly<Rational>(rng, th::ring(0), {2, 6, 1, 7});
    if (!is_NND(f)) continue;
    const auto nu = blowup_nu(f).nu;
    EXPECT_TRUE(ext_equal(nu, delta_n(f))) << format(f);
  }
}
