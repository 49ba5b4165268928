#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace singchar;

TEST(Field, RejectsCompositeAndHugeCharacteristic) {
  EXPECT_NO_THROW(CoefficientField(0));
  EXPECT_NO_THROW(CoefficientField(23));
  try {
    CoefficientField(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidCharacteristic);
    EXPECT_STREQ(e.what(), "characteristic must be 0 or prime");
  }
  EXPECT_THROW(CoefficientField(1), Error);
  EXPECT_THROW(CoefficientField(CoefficientField::kMaxPrime + 2), Error);
  EXPECT_NO_THROW(CoefficientField(CoefficientField::kMaxPrime));
}

TEST(Scalars, SmallExamples) {
  const CoefficientField f5(5), f2(2), q(0);
  EXPECT_EQ(Zp::from_int(2, f5).inverse(), Zp::from_int(3, f5));
  EXPECT_EQ(Zp::from_int(1, f2) + Zp::from_int(1, f2), Zp::from_int(0, f2));
  EXPECT_EQ(Rational::from_fraction(1, 2) + Rational::from_fraction(1, 3), Rational::from_fraction(5, 6));
  EXPECT_EQ(Zp::from_int(-1, f5), Zp::from_int(4, f5));
  EXPECT_EQ(Zp::from_int(7, f5).times(5), Zp::from_int(0, f5));
  EXPECT_TRUE(Rational::from_int(3, q).times(0).is_zero());
}

TEST(Scalars, DivisionByZeroAndFieldMismatch) {
  const CoefficientField f5(5), f7(7);
  EXPECT_THROW(Zp::zero(f5).inverse(), Error);
  EXPECT_THROW(Rational::zero(CoefficientField(0)).inverse(), Error);
  EXPECT_THROW(Zp::one(f5) + Zp::one(f7), Error);
  EXPECT_THROW(Rational::from_int(1, f5), Error);
}

TEST(Scalars, FermatOnAllResidues) {
  for (std::uint64_t p : {2, 3, 5, 7, 23, 101}) {
    const CoefficientField f(p);
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a) {
      const Zp x = Zp::from_int(a, f);
      EXPECT_TRUE((x * x.inverse()).is_one());
    }
  }
}

TEST(UPoly, GcdExamples) {
  const CoefficientField q(0), f2(2);
  using U = UPoly<Rational>;
  EXPECT_EQ(univariate_gcd(U::from_ints(q, {-1, 0, 1}), U::from_ints(q, {-1, 1})), U::from_ints(q, {-1, 1}));
  EXPECT_EQ(univariate_gcd(UPoly<Zp>::from_ints(f2, {1, 0, 1}), UPoly<Zp>::from_ints(f2, {1, 1})),
            UPoly<Zp>::from_ints(f2, {1, 1}));
  EXPECT_EQ(univariate_gcd(U::from_ints(q, {0, 1}), U::from_ints(q, {1})), U::from_ints(q, {1}));
  EXPECT_THROW(univariate_gcd(U(q), U(q)), Error);
}

TEST(UPoly, StripAndDivide) {
  const CoefficientField q(0);
  using U = UPoly<Rational>;
  EXPECT_EQ(U::from_ints(q, {0, 0, 2, 1}).strip_t_powers(), U::from_ints(q, {2, 1}));
  const auto [quo, rem] = U::from_ints(q, {1, 0, 0, 1}).divmod(U::from_ints(q, {1, 1}));
  EXPECT_EQ(quo, U::from_ints(q, {1, -1, 1}));
  EXPECT_TRUE(rem.is_zero());
}

TEST(ExtendedNumbers, InfinityArithmetic) {
  const ExtNat inf = ExtNat::infinity();
  EXPECT_EQ(inf + ExtNat(3), inf);
  EXPECT_EQ(ExtNat(0) * inf, ExtNat(0));
  EXPECT_LT(ExtNat(1000000), inf);
  EXPECT_EQ(inf.to_string(), "infinity");
  EXPECT_TRUE(ExtRational::infinity().is_infinite());
  EXPECT_EQ(ExtRational(mpq_class(7, 2)).to_string(), "7/2");
}
