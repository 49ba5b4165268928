#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace singchar;
using th::fp;
using th::q;

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> verts(const NewtonDiagram& d) {
  std::vector<std::pair<std::int64_t, std::int64_t>> v;
  for (const auto& p : d.vertices) v.emplace_back(p.x, p.y);
  return v;
}

using VL = std::vector<std::pair<std::int64_t, std::int64_t>>;

}  // namespace

TEST(Diagram, Examples) {
  const auto a = newton_diagram(q("x6+y3+x5y"));
  EXPECT_EQ(verts(a), (VL{{0, 3}, {6, 0}}));
  ASSERT_EQ(a.facets.size(), 1u);
  EXPECT_EQ(a.facets[0].lattice_length, 3u);
  EXPECT_EQ(a.facets[0].weight, (WeightVector{1, 2}));
  EXPECT_EQ(a.facets[0].w_degree, 6u);
  EXPECT_TRUE(a.convenient);

  const auto b = newton_diagram(q("x4y+x2y2+y5"));
  EXPECT_EQ(verts(b), (VL{{0, 5}, {2, 2}, {4, 1}}));
  ASSERT_EQ(b.facets.size(), 2u);
  EXPECT_EQ(b.facets[0].lattice_length, 1u);
  EXPECT_EQ(b.facets[1].lattice_length, 1u);
  EXPECT_FALSE(b.convenient);
  EXPECT_EQ(b.y_div, 1u);
  EXPECT_EQ(b.x_div, 0u);

  const auto c = newton_diagram(q("xy"));
  EXPECT_EQ(verts(c), (VL{{1, 1}}));
  EXPECT_TRUE(c.facets.empty());
  EXPECT_EQ(c.x_div, 1u);
  EXPECT_EQ(c.y_div, 1u);
}

TEST(Diagram, Errors) {
  EXPECT_THROW(newton_diagram(q("0")), Error);
  EXPECT_THROW(newton_diagram(q("x+y+z", {"x", "y", "z"})), Error);
}

TEST(InitialForm, Examples) {
  const auto f = q("x6+y3+x5y");
  EXPECT_EQ(initial_form(f, Face::segment({0, 3}, {6, 0})), q("x6+y3"));
  EXPECT_EQ(initial_form(f, Face::vertex({0, 3})), q("y3"));
  EXPECT_EQ(initial_form(q("x3+y2"), Face::segment({3, 0}, {0, 2})), q("x3+y2"));
  try {
    initial_form(f, Face::segment({0, 3}, {5, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FaceNotOnDiagram);
  }
}

TEST(CPolytope, CanonicalExamples) {
  const auto P = canonical_c_polytope(q("x4y+x2y2+y5"));
  const auto v = P.vertices();
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v.back(), (RationalPoint{6, 0}));
  EXPECT_TRUE(P.facets.back().extended_right);
  EXPECT_FALSE(P.facets.front().extended());

  const auto Q = canonical_c_polytope(q("x3+y2+x2y"));
  for (const auto& f : Q.facets) EXPECT_FALSE(f.extended());

  // x^2 y + y^4: endpoint (2,1) is at distance one from the x-axis.
  const auto R = canonical_c_polytope(q("x2y+y4"));
  ASSERT_EQ(R.facets.size(), 1u);
  EXPECT_EQ(R.facets[0].right, (RationalPoint{mpq_class(8, 3), 0}));
}

TEST(CPolytope, Errors) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InternalInconsistency;
  };
  EXPECT_EQ(code([] { canonical_c_polytope(q("x2y+x3")); }), Errc::DivergentDiagram);
  EXPECT_EQ(code([] { canonical_c_polytope(q("xy")); }), Errc::NoFacet);
  EXPECT_EQ(code([] { CPolytope::from_vertices({{0, 4}, {1, 1}}); }), Errc::NoFacet);
  EXPECT_EQ(code([] { CPolytope::from_vertices({{0, 4}, {3, 3}, {4, 0}}); }), Errc::NoFacet);
  EXPECT_NO_THROW(CPolytope::from_vertices({{0, 4}, {4, 0}}));
}

TEST(Volumes, Examples) {
  const auto v = volumes(newton_diagram(q("x6+y3")));
  EXPECT_EQ(v.v2, mpq_class(9));
  EXPECT_EQ(v.v1, mpq_class(9));
  EXPECT_EQ(v.v0, mpq_class(1));
  EXPECT_THROW(volumes(newton_diagram(q("x4y+y5"))), Error);
}

TEST(NewtonNumber, Examples) {
  EXPECT_EQ(newton_number(q("x6+y3+x5y")), ExtNat(10));
  EXPECT_EQ(newton_number(fp(2, "(x-y)^2+x5")), ExtNat(1));
  EXPECT_EQ(newton_number(q("x4y+x2y2+y5")), ExtNat(12));
  EXPECT_TRUE(newton_number(q("x2")).is_infinite());
  EXPECT_TRUE(newton_number(q("x2y+y5")).is_finite());
  EXPECT_TRUE(newton_number(q("y2x+x5")).is_finite());
  EXPECT_THROW(newton_number(q("1+x")), Error);
}

TEST(NewtonNumber, BrieskornFamily) {
  for (int a = 2; a <= 7; ++a)
    for (int b = 2; b <= 7; ++b) {
      const auto f = q("x" + std::to_string(a) + "+y" + std::to_string(b));
      EXPECT_EQ(newton_number(f), ExtNat((a - 1) * (b - 1)));
      EXPECT_EQ(milnor_number(f), newton_number(f));
    }
}

TEST(DeltaN, Examples) {
  EXPECT_EQ(delta_n(q("x4y+x2y2+y5")), ExtRational(7));
  EXPECT_EQ(delta_n(q("x4y+x2y2+y5+x6+y6")), ExtRational(7));
  EXPECT_EQ(delta_n(q("x6+x2y2+y5")), ExtRational(7));
  EXPECT_EQ(delta_n(fp(2, "(x-y)^2+x5")), ExtRational(1));
  EXPECT_EQ(delta_n(q("y2+x3")), ExtRational(1));
  EXPECT_TRUE(delta_n(q("x2")).is_infinite());
}

TEST(RN, Examples) {
  EXPECT_EQ(r_n(fp(2, "(x-y)^2+x5")), 2u);
  EXPECT_EQ(r_n(q("xy")), 2u);
  EXPECT_EQ(r_n(q("x4y+x2y2+y5")), 3u);
}

TEST(Stabilization, ValuesConstantFromStabilizationDegree) {
  const auto f = q("x4y+x2y2+y5");
  const auto m = stabilization_degree(f);
  for (std::uint32_t k = m; k < m + 4; ++k) {
    EXPECT_EQ(delta_n_at(f, k), ExtRational(7));
    EXPECT_EQ(newton_number_at(f, k), ExtNat(12));
  }
}

TEST(NewtonFormula, MuNEqualsTwoDeltaMinusRPlusOne) {
  Rng rng(13);
  for (std::uint64_t ch : {0, 2, 3}) {
    for (int i = 0; i < 80; ++i) {
      detail::with_field(ch, [&]<class K>(K) {
        const auto f = random_poly<K>(rng, th::ring(ch), {2, 6, 1, 8});
        const auto mu_n = newton_number(f);
        if (mu_n.is_infinite()) return 0;
        const auto rhs = milnor_rhs(delta_n(f), r_n(f));
        EXPECT_TRUE(ext_equal(mu_n, rhs)) << format(f);
        return 0;
      });
    }
  }
}
