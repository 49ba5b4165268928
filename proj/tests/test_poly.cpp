#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace singchar;
using th::fp;
using th::q;

TEST(Parse, CompactForm) {
  const auto f = fp(23, "y8+x8y4+x23");
  ASSERT_EQ(f.size(), 3u);
  const CoefficientField F(23);
  EXPECT_EQ(f.coefficient(Monomial{0, 8}), Zp::one(F));
  EXPECT_EQ(f.coefficient(Monomial{8, 4}), Zp::one(F));
  EXPECT_EQ(f.coefficient(Monomial{23, 0}), Zp::one(F));
}

TEST(Parse, ExplicitFormAndParentheses) {
  EXPECT_EQ(fp(3, "(1+x)*(x^3+y^2)"), fp(3, "x^3+y^2+x^4+x*y^2"));
  EXPECT_TRUE(q("0").is_zero());
  EXPECT_EQ(q("1/2*x^2 - 3/4*y"), q("2/4*x2-6/8*y"));
  EXPECT_EQ(q("-(x-y)^2"), q("-x^2+2*x*y-y^2"));
}

TEST(Parse, Errors) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InternalInconsistency;
  };
  EXPECT_EQ(code([] { q("x+"); }), Errc::SyntaxError);
  EXPECT_EQ(code([] { q("x+w"); }), Errc::UnknownVariable);
  EXPECT_EQ(code([] { q("(x+y"); }), Errc::SyntaxError);
  EXPECT_EQ(code([] { fp(5, "1/2*x"); }), Errc::SyntaxError);
  EXPECT_EQ(code([] { q("x/0"); }), Errc::SyntaxError);
  EXPECT_EQ(code([] { th::ring(0, {"x", "x"}); }), Errc::SyntaxError);
  EXPECT_EQ(code([] { th::ring(0, {"a", "b", "c", "d", "e", "f", "g", "h", "i"}); }), Errc::TooManyVariables);
}

TEST(Parse, MultiLetterNamesNeedExplicitForm) {
  const RingPtr r = th::ring(0, {"u1", "v1"});
  EXPECT_EQ(format(parse<Rational>("u1^2*v1 + 3*v1^4", r)), "u1^2*v1 + 3*v1^4");
}

TEST(Parse, FormatRoundTripOnRandomPolynomials) {
  Rng rng(7);
  for (std::uint64_t ch : {0, 2, 3, 5, 7}) {
    const RingPtr r = th::ring(ch, {"x", "y", "z"});
    for (int i = 0; i < 50; ++i) {
      detail::with_field(ch, [&]<class K>(K) {
        const auto f = random_poly<K>(rng, r, {1, 8, 0, 9});
        EXPECT_EQ(parse<K>(format(f), r), f) << format(f);
        return 0;
      });
    }
  }
}

TEST(RingOps, Examples) {
  EXPECT_EQ(fp(2, "(x+y)^2"), fp(2, "x2+y2"));
  EXPECT_EQ(fp(5, "(1+x)*(x5+y4)"), fp(5, "x5+y4+x6+xy4"));
  EXPECT_TRUE((q("x+y") * q("0")).is_zero());
  EXPECT_EQ(q("x+y").pow(0), q("1"));
  EXPECT_THROW(fp(3, "x") + fp(5, "x"), Error);
}

TEST(Order, Examples) {
  EXPECT_EQ(fp(2, "y2+x3y").order(), ExtNat(2));
  EXPECT_EQ(fp(23, "y8+x8y4+x23").order(), ExtNat(8));
  EXPECT_TRUE(q("0").order().is_infinite());
  EXPECT_EQ(q("3+x").order(), ExtNat(0));
}

TEST(Jet, Examples) {
  EXPECT_EQ(jet(fp(2, "y2+x3y"), 2), fp(2, "y2"));
  EXPECT_EQ(jet(fp(5, "x5+y4+x6+xy4"), 5), fp(5, "x5+y4+xy4"));
  EXPECT_TRUE(jet(q("x3"), 2).is_zero());
}

TEST(Derivatives, Examples) {
  EXPECT_EQ(partial_derivative(fp(2, "y2+x3y"), 1), fp(2, "x3"));
  EXPECT_TRUE(partial_derivative(fp(7, "x7"), 0).is_zero());
  EXPECT_EQ(partial_derivative(q("x3+y2"), 0), q("3x2"));
}

TEST(Ideals, JacobianAndTjurina) {
  const auto j = jacobian_ideal(fp(2, "y2+x3y"));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0], fp(2, "x2y"));
  EXPECT_EQ(j[1], fp(2, "x3"));

  for (std::uint64_t p : {3, 5, 7}) {
    const auto f = fp(p, "x" + std::to_string(p) + "+y" + std::to_string(p - 1));
    const auto jp = jacobian_ideal(f);
    EXPECT_TRUE(jp[0].is_zero());
    EXPECT_EQ(jp[1], fp(p, "-y" + std::to_string(p - 2)));
  }

  const auto tj = tjurina_ideal(q("x2+y2"));
  ASSERT_EQ(tj.size(), 3u);
  EXPECT_EQ(tj[0], q("x2+y2"));
  EXPECT_EQ(tj[1], q("2x"));
  EXPECT_EQ(tj[2], q("2y"));

  const auto tz = tjurina_ideal(q("0"));
  ASSERT_EQ(tz.size(), 3u);
  for (const auto& g : tz) EXPECT_TRUE(g.is_zero());
}

TEST(AxisPowers, ExamplesAndCollision) {
  EXPECT_EQ(add_axis_powers(q("x4y+x2y2+y5"), 6), q("x4y+x2y2+y5+x6+y6"));
  bool collision = false;
  EXPECT_EQ(add_axis_powers(fp(2, "x6"), 6, &collision), fp(2, "y6"));
  EXPECT_TRUE(collision);
  add_axis_powers(q("x6"), 6, &collision);
  EXPECT_FALSE(collision);
}

TEST(Substitute, SwapAndIdentity) {
  const auto f = q("y2+x3");
  EXPECT_EQ(substitute(f, {q("y"), q("x")}), q("x2+y3"));
  EXPECT_EQ(substitute(f, {q("x"), q("y")}), f);
  EXPECT_THROW(substitute(f, {q("x")}), Error);
}

TEST(Substitute, CompositionWithUnitIsRightEquivalent) {
  // mu is invariant under coordinate changes; spot check on a few shears.
  const auto f = q("x3+y5");
  const auto g = substitute(f, {q("x+y2"), q("y+x2")});
  EXPECT_EQ(milnor_number(g), milnor_number(f));
}
