#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace singchar;

TEST(Json, ExtendedValues) {
  EXPECT_EQ(to_json(ExtNat::infinity()), json("infinity"));
  EXPECT_EQ(to_json(ExtNat(4)), json(4));
  EXPECT_EQ(to_json(ExtRational(mpq_class(7, 2))), json("7/2"));
  EXPECT_EQ(to_json(ExtRational(mpq_class(6, 2))), json(3));
}

TEST(Json, ReportFields) {
  const auto r = invariant_report(0, {"x", "y"}, "x4y+x2y2+y5");
  EXPECT_EQ(r["mu"], json(12));
  EXPECT_EQ(r["newton"]["mu_N"], json(12));
  EXPECT_EQ(r["newton"]["delta_N"], json(7));
  EXPECT_EQ(r["newton"]["r_N"], json(3));
  EXPECT_EQ(r["curve"]["nu"], json(7));
  EXPECT_TRUE(r["nondeg"]["NND"].get<bool>());
  EXPECT_FALSE(r.contains("timing_ms"));
}

TEST(Json, InfiniteMu) {
  const auto r = invariant_report(5, {"x", "y"}, "x5+y4");
  EXPECT_EQ(r["mu"], json("infinity"));
  EXPECT_EQ(r["tau"], json(15));
}

TEST(Json, OutOfScopeNote) {
  const auto r = invariant_report(0, {"x", "y", "z"}, "x2+y2+z2");
  for (const char* s : {"newton", "nondeg", "curve"}) EXPECT_EQ(r[s]["skipped"], json("out of scope (n>2)"));
  EXPECT_EQ(r["mu"], json(1));
}

TEST(Json, SkipAndTiming) {
  ReportOptions opt;
  opt.skip = {"tau", "curve"};
  opt.timing = true;
  const auto r = invariant_report(0, {"x", "y"}, "x3+y2", opt);
  EXPECT_FALSE(r.contains("tau"));
  EXPECT_FALSE(r.contains("curve"));
  EXPECT_TRUE(r.contains("timing_ms"));
}

TEST(Json, DeterministicAndRoundTrips) {
  const auto a = invariant_report(3, {"x", "y"}, "x6+y3+x5y").dump();
  const auto b = invariant_report(3, {"x", "y"}, "x6+y3+x5y").dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(json::parse(a).dump(), a);
  const auto r = json::parse(a);
  const auto again = invariant_report(3, {"x", "y"}, r["input"]["polynomial"].get<std::string>()).dump();
  EXPECT_EQ(again, a);
}

TEST(Json, StageErrorsEmbedded) {
  const auto r = invariant_report(0, {"x", "y"}, "x2");
  EXPECT_TRUE(r["determinacy"]["right"].contains("error") || r["determinacy"]["right"].contains("k_star"));
  EXPECT_THROW(invariant_report(0, {"x", "y"}, "0"), Error);
  EXPECT_THROW(invariant_report(4, {"x", "y"}, "x"), Error);
}

TEST(Json, OracleAndRsqh) {
  const auto o = to_json(oracle_dimension(jacobian_ideal(th::q("x3+y2"))));
  EXPECT_EQ(o["dim"], json(2));
  EXPECT_TRUE(o["certified"].get<bool>());
  const auto s = to_json(rsqh_check(th::q("x3+y2"), WeightVector{2, 3}));
  EXPECT_EQ(s["d"], json(6));
  EXPECT_EQ(s["mu_formula"], json(2));
}
