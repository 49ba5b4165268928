#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace singchar;
using th::fp;
using th::q;

TEST(Milnor, Examples) {
  EXPECT_EQ(milnor_number(fp(5, "(1+x)*(x5+y4)")), ExtNat(15));
  EXPECT_TRUE(milnor_number(fp(5, "x5+y4")).is_infinite());
  EXPECT_EQ(milnor_number(fp(2, "x6+y3+x5y")), ExtNat(13));
  EXPECT_EQ(milnor_number(q("(x+y)^2+x*z+z^2", {"x", "y", "z"})), ExtNat(1));
  EXPECT_TRUE(milnor_number(fp(2, "y2+x3y")).is_infinite());
  EXPECT_THROW(milnor_number(q("0")), Error);
}

TEST(Milnor, SmoothAndUnitInputs) {
  EXPECT_EQ(milnor_number(q("x+y3")), ExtNat(0));
  EXPECT_EQ(milnor_number(q("1+x2+y2")), ExtNat(1));
}

TEST(Tjurina, Examples) {
  EXPECT_EQ(tjurina_number(fp(2, "y2+x3y")), ExtNat(5));
  EXPECT_EQ(tjurina_number(fp(5, "x5+y4")), ExtNat(15));
  EXPECT_EQ(tjurina_number(q("x2+y2")), ExtNat(1));
  // The unit is irrelevant for tau but not for mu in positive characteristic.
  EXPECT_EQ(tjurina_number(fp(5, "(1+x)*(x5+y4)")), ExtNat(15));
}

TEST(Tjurina, CharacteristicPFamily) {
  for (std::uint64_t p : {3, 5, 7}) {
    const std::string g = "x" + std::to_string(p) + "+y" + std::to_string(p - 1);
    EXPECT_TRUE(milnor_number(fp(p, g)).is_infinite());
    EXPECT_EQ(tjurina_number(fp(p, g)), ExtNat(p * (p - 2)));
    EXPECT_EQ(milnor_number(fp(p, "(1+x)*(" + g + ")")), ExtNat(p * (p - 2)));
  }
}

TEST(Tjurina, OracleAgreesOnDerivedValues) {
  EXPECT_EQ(oracle_dimension(tjurina_ideal(q("x2+y2"))).dim, 1u);
  EXPECT_EQ(oracle_dimension(jacobian_ideal(q("x2+y3"))).dim, 2u);
  EXPECT_EQ(oracle_dimension(tjurina_ideal(q("x2+y3"))).dim, 2u);
}

TEST(Tjurina, TauAtMostMu) {
  Rng rng(5);
  for (std::uint64_t ch : {0, 2, 3, 5, 7}) {
    for (int i = 0; i < 30; ++i) {
      detail::with_field(ch, [&]<class K>(K) {
        const auto f = random_poly<K>(rng, th::ring(ch), {2, 5, 2, 7});
        EXPECT_LE(tjurina_number(f), milnor_number(f)) << format(f);
        return 0;
      });
    }
  }
}

TEST(Tjurina, ContactInvariantUnderUnitMultiple) {
  Rng rng(9);
  for (std::uint64_t ch : {0, 3, 7}) {
    for (int i = 0; i < 30; ++i) {
      detail::with_field(ch, [&]<class K>(K) {
        const RingPtr r = th::ring(ch);
        const auto f = random_poly<K>(rng, r, {2, 5, 2, 7});
        const auto u = parse<K>("1+x-2*y+x*y", r);
        EXPECT_EQ(tjurina_number(u * f), tjurina_number(f)) << format(f);
        return 0;
      });
    }
  }
}

TEST(Determinacy, ContactExamples) {
  const auto r = determinacy_bound(fp(2, "y2+x3y"), EquivalenceKind::Contact);
  EXPECT_EQ(r.ord, 2u);
  EXPECT_EQ(r.invariant, ExtNat(5));
  EXPECT_EQ(r.k_star, ExtInt(3));
  EXPECT_EQ(r.theorem_bound, ExtInt(6));
  EXPECT_EQ(r.corollary_bound, ExtInt(10));
  EXPECT_EQ(r.best, ExtInt(6));

  const auto s = determinacy_bound(fp(23, "y8+x8y4+x23"), EquivalenceKind::Contact);
  EXPECT_EQ(s.k_star, ExtInt(23));
  EXPECT_EQ(s.theorem_bound, ExtInt(40));
  ASSERT_TRUE(s.highcorner.has_value());
  EXPECT_EQ(format_monomial(*s.highcorner, {"x", "y"}), "x^22*y^2");
}

TEST(Determinacy, RightWithInfiniteMilnorNumber) {
  const auto r = determinacy_bound(fp(2, "y2+x3y"), EquivalenceKind::Right);
  EXPECT_TRUE(r.invariant.is_infinite());
  EXPECT_TRUE(r.k_star.is_infinite());
  EXPECT_TRUE(r.best.is_infinite());
  EXPECT_FALSE(r.highcorner.has_value());
}

TEST(Determinacy, RightBoundForA2) {
  // x^2 + y^3 is 3-determined; the bound must be at least that.
  const auto r = determinacy_bound(q("x2+y3"), EquivalenceKind::Right);
  EXPECT_EQ(r.invariant, ExtNat(2));
  EXPECT_GE(r.best, ExtInt(3));
  EXPECT_LE(r.theorem_bound, r.corollary_bound);
}

TEST(Determinacy, Errors) {
  EXPECT_THROW(determinacy_bound(q("0"), EquivalenceKind::Right), Error);
  try {
    determinacy_bound(q("x+y2"), EquivalenceKind::Right);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OrderTooSmall);
  }
}

TEST(Determinacy, TheoremBoundNeverExceedsCorollary) {
  Rng rng(21);
  for (std::uint64_t ch : {0, 2, 3, 5}) {
    for (int i = 0; i < 25; ++i) {
      detail::with_field(ch, [&]<class K>(K) {
        const auto f = random_poly<K>(rng, th::ring(ch), {2, 5, 2, 6});
        if (f.order() < ExtNat(2)) return 0;
        for (auto kind : {EquivalenceKind::Right, EquivalenceKind::Contact}) {
          const auto r = determinacy_bound(f, kind);
          EXPECT_LE(r.theorem_bound, r.corollary_bound) << format(f);
        }
        return 0;
      });
    }
  }
}

TEST(Isolatedness, Examples) {
  const auto a = isolatedness(fp(5, "x5+y4"));
  EXPECT_FALSE(a.right_isolated);
  EXPECT_TRUE(a.contact_isolated);
  const auto b = isolatedness(q("x2+y3"));
  EXPECT_TRUE(b.right_isolated && b.contact_isolated);
  const auto c = isolatedness(q("xy2"));
  EXPECT_FALSE(c.right_isolated || c.contact_isolated);
  EXPECT_THROW(isolatedness(q("1+x")), Error);
}

TEST(Isolatedness, CoordinateAxisShortcut) {
  const std::vector<std::string> v{"x", "y", "z"};
  const auto f = q("2*x*y*z - 3*x^3*z - x^2*y^2 - 2*y^2*z^2", v);
  EXPECT_TRUE(common_coordinate_axis(tjurina_ideal(f)));
  EXPECT_TRUE(tjurina_number(f).is_infinite());
  EXPECT_TRUE(milnor_number(f).is_infinite());
  EXPECT_FALSE(common_coordinate_axis(jacobian_ideal(q("x2+y3+z4", v))));
}

TEST(Isolatedness, QuasihomogeneousTestMatchesMilnorNumber) {
  Rng rng(17);
  for (std::uint64_t ch : {0, 2, 3, 5, 7}) {
    for (int i = 0; i < 20; ++i) {
      detail::with_field(ch, [&]<class K>(K) {
        const auto s = random_sqh<K>(rng, th::ring(ch, i % 2 ? std::vector<std::string>{"x", "y", "z"}
                                                              : std::vector<std::string>{"x", "y"}));
        const auto [d, in] = weighted_initial_form(s.f, s.w);
        EXPECT_TRUE(qh_isolated(in, s.w, d));
        EXPECT_TRUE(milnor_number(in).is_finite()) << format(in);
        return 0;
      });
    }
  }
  EXPECT_FALSE(qh_isolated(q("x2y"), WeightVector{1, 1}, 3));
  EXPECT_TRUE(qh_isolated(q("x3+y3"), WeightVector{1, 1}, 3));
}

TEST(Milnor, CubicPlusFoldNotIsolated) {
  const std::vector<std::string> v{"x", "y", "z"};
  // The line x = -y, z = 0 is singular: f_x - f_y = z^2 and f_z = z(2x + 3z).
  EXPECT_TRUE(milnor_number(fp(5, "(x+y)^3+x*z^2+z^3", v)).is_infinite());
  EXPECT_TRUE(milnor_number(q("(x+y)^3+x*z^2+z^3", v)).is_infinite());
  EXPECT_EQ(milnor_number(fp(5, "(x+y)^3+x^2*z+z^3", v)), ExtNat(8));
  EXPECT_EQ(milnor_number(q("(x+y)^3+x^2*z+z^3", v)), ExtNat(8));
}
