#pragma once

// Planar Newton diagrams: lower hull, faces, initial forms, the canonical
// C-polytope, and the combinatorial invariants mu_N, delta_N and r_N.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "singchar/error.hpp"
#include "singchar/extended.hpp"
#include "singchar/poly.hpp"

namespace singchar {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Compact edge of the Newton polyhedron. `left` is the endpoint nearer the y-axis.
struct Facet {
  LatticePoint left;
  LatticePoint right;
  WeightVector weight;          // primitive inner normal
  std::uint64_t w_degree = 0;   // weight . endpoint
  std::uint64_t lattice_length = 0;
};

struct NewtonDiagram {
  std::vector<LatticePoint> vertices;  // increasing x, decreasing y
  std::vector<Facet> facets;
  std::uint32_t x_div = 0;  // max j with x^j | f
  std::uint32_t y_div = 0;  // max l with y^l | f
  bool convenient = false;

  bool meets_y_axis() const { return vertices.front().x == 0; }
  bool meets_x_axis() const { return vertices.back().y == 0; }
};

/// A face of a diagram: a vertex (left == right) or a facet.
struct Face {
  LatticePoint left;
  LatticePoint right;
  bool is_vertex() const { return left == right; }
  static Face vertex(LatticePoint p) { return {p, p}; }
  static Face segment(LatticePoint a, LatticePoint b) { return a.x <= b.x ? Face{a, b} : Face{b, a}; }
};

namespace detail {

inline void require_planar(std::size_t nvars) {
  if (nvars != 2) fail(Errc::WrongArity, "Newton combinatorics is implemented for two variables only");
}

/// Cross product of (b - a) and (c - a).
inline std::int64_t cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline Facet make_facet(LatticePoint a, LatticePoint b) {
  const std::uint64_t dx = static_cast<std::uint64_t>(b.x - a.x);
  const std::uint64_t dy = static_cast<std::uint64_t>(a.y - b.y);
  const std::uint64_t g = std::gcd(dx, dy);
  Facet f;
  f.left = a;
  f.right = b;
  f.weight = WeightVector{dy / g, dx / g};
  f.w_degree = f.weight[0] * static_cast<std::uint64_t>(a.x) + f.weight[1] * static_cast<std::uint64_t>(a.y);
  f.lattice_length = g;
  return f;
}

}  // namespace detail

/// Lower-left convex hull of supp(f) + R^2_{>=0}.
inline NewtonDiagram newton_diagram_of_support(const std::vector<LatticePoint>& support) {
  if (support.empty()) fail(Errc::ZeroInput, "Newton diagram of the zero series");
  // Pareto-minimal points: for each x keep the least y, then keep strictly decreasing y.
  std::vector<LatticePoint> pts = support;
  std::sort(pts.begin(), pts.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  std::vector<LatticePoint> front;
  for (const auto& p : pts) {
    if (!front.empty() && front.back().x == p.x) continue;
    if (!front.empty() && front.back().y <= p.y) continue;
    front.push_back(p);
  }
  // Lower convex chain (monotone chain); the front has decreasing y so every edge has negative slope.
  std::vector<LatticePoint> hull;
  for (const auto& p : front) {
    while (hull.size() >= 2 && detail::cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  NewtonDiagram d;
  d.vertices = hull;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) d.facets.push_back(detail::make_facet(hull[i], hull[i + 1]));
  std::int64_t min_x = INT64_MAX, min_y = INT64_MAX;
  for (const auto& p : support) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  d.x_div = static_cast<std::uint32_t>(min_x);
  d.y_div = static_cast<std::uint32_t>(min_y);
  d.convenient = d.meets_y_axis() && d.meets_x_axis();
  return d;
}

template <Coefficient K>
std::vector<LatticePoint> planar_support(const Poly<K>& f) {
  detail::require_planar(f.nvars());
  std::vector<LatticePoint> s;
  for (const auto& t : f.terms()) s.push_back({t.mono[0], t.mono[1]});
  return s;
}

template <Coefficient K>
NewtonDiagram newton_diagram(const Poly<K>& f) {
  detail::require_planar(f.nvars());
  if (f.is_zero()) fail(Errc::ZeroInput, "Newton diagram of the zero series");
  return newton_diagram_of_support(planar_support(f));
}

inline bool face_on_diagram(const NewtonDiagram& d, const Face& face) {
  if (face.is_vertex())
    return std::find(d.vertices.begin(), d.vertices.end(), face.left) != d.vertices.end();
  return std::any_of(d.facets.begin(), d.facets.end(),
                     [&](const Facet& f) { return f.left == face.left && f.right == face.right; });
}

/// Terms of f whose exponents lie on the closed segment (or point) `face`.
template <Coefficient K>
Poly<K> terms_on_segment(const Poly<K>& f, const Face& face) {
  std::vector<Term<K>> kept;
  const LatticePoint a = face.left, b = face.right;
  for (const auto& t : f.terms()) {
    const LatticePoint p{t.mono[0], t.mono[1]};
    if (face.is_vertex()) {
      if (p == a) kept.push_back(t);
      continue;
    }
    if (detail::cross(a, b, p) != 0) continue;
    if (p.x < a.x || p.x > b.x) continue;
    kept.push_back(t);
  }
  return Poly<K>::from_terms(f.ring(), std::move(kept));
}

/// In_face(f); the face must be a vertex or facet of Gamma(f).
template <Coefficient K>
Poly<K> initial_form(const Poly<K>& f, const Face& face) {
  const NewtonDiagram d = newton_diagram(f);
  if (!face_on_diagram(d, face)) fail(Errc::FaceNotOnDiagram, "face is not a face of the Newton diagram");
  return terms_on_segment(f, face);
}

// ---------------------------------------------------------------------------
// C-polytopes

struct RationalPoint {
  mpq_class x;
  mpq_class y;
  friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.x == b.x && a.y == b.y; }
};

inline RationalPoint to_rational(const LatticePoint& p) {
  return {mpq_class(static_cast<long>(p.x)), mpq_class(static_cast<long>(p.y))};
}

struct CFacet {
  RationalPoint left;
  RationalPoint right;
  WeightVector weight;  // primitive integral inner normal
  mpq_class w_degree;
  bool extended_left = false;
  bool extended_right = false;

  bool extended() const { return extended_left || extended_right; }
  bool meets_y_axis() const { return left.x == 0; }
  bool meets_x_axis() const { return right.y == 0; }

  /// The lattice point p lies on this closed segment.
  bool contains(const LatticePoint& p) const {
    const RationalPoint q = to_rational(p);
    return weighted(q) == w_degree && q.x >= left.x && q.x <= right.x;
  }
  bool below(const Monomial& m) const { return weighted(to_rational({m[0], m[1]})) < w_degree; }

 private:
  mpq_class weighted(const RationalPoint& q) const {
    return mpq_class(static_cast<unsigned long>(weight[0])) * q.x + mpq_class(static_cast<unsigned long>(weight[1])) * q.y;
  }
};

namespace detail {

inline CFacet make_cfacet(const RationalPoint& a, const RationalPoint& b) {
  const mpq_class dx = b.x - a.x;
  const mpq_class dy = a.y - b.y;
  if (dx <= 0 || dy <= 0) fail(Errc::NoFacet, "C-polytope edges must run down and to the right");
  // Clear denominators, then divide by the gcd.
  mpz_class nx = dy.get_num() * dx.get_den();
  mpz_class ny = dx.get_num() * dy.get_den();
  const mpz_class g = gcd(nx, ny);
  nx /= g;
  ny /= g;
  CFacet f;
  f.left = a;
  f.right = b;
  f.weight = WeightVector{nx.get_ui(), ny.get_ui()};
  f.w_degree = mpq_class(nx) * a.x + mpq_class(ny) * a.y;
  return f;
}

}  // namespace detail

struct CPolytope {
  std::vector<CFacet> facets;

  /// Vertices in order from the y-axis to the x-axis.
  std::vector<RationalPoint> vertices() const {
    std::vector<RationalPoint> v;
    for (const auto& f : facets) {
      if (v.empty()) v.push_back(f.left);
      v.push_back(f.right);
    }
    return v;
  }

  /// Polytope through the given vertices, first on the y-axis, last on the x-axis.
  static CPolytope from_vertices(const std::vector<RationalPoint>& v) {
    if (v.size() < 2) fail(Errc::NoFacet, "a C-polytope needs at least one edge");
    if (v.front().x != 0 || v.back().y != 0)
      fail(Errc::NoFacet, "a C-polytope must start on the y-axis and end on the x-axis");
    CPolytope p;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i].x < 0 || v[i].y < 0) fail(Errc::NoFacet, "vertices must lie in the positive quadrant");
      p.facets.push_back(detail::make_cfacet(v[i], v[i + 1]));
    }
    // Convexity of the region above: slopes -w1/w2 increase along the chain.
    for (std::size_t i = 0; i + 1 < p.facets.size(); ++i) {
      const auto& a = p.facets[i].weight;
      const auto& b = p.facets[i + 1].weight;
      if (mpz_class(static_cast<unsigned long>(a[0])) * b[1] <= mpz_class(static_cast<unsigned long>(b[0])) * a[1])
        fail(Errc::NoFacet, "C-polytope vertices are not in convex position");
    }
    return p;
  }

  /// The facet containing the given lattice segment, if any.
  const CFacet* facet_containing(const LatticePoint& a, const LatticePoint& b) const {
    for (const auto& f : facets)
      if (f.contains(a) && f.contains(b)) return &f;
    return nullptr;
  }
};

/// The unique C-polytope with the same edges as Gamma(f), obtained by prolonging the
/// extreme edges to the coordinate axes when they stop at distance one.
inline CPolytope canonical_c_polytope(const NewtonDiagram& d) {
  if (d.facets.empty()) fail(Errc::NoFacet, "the Newton diagram has no facet");
  const LatticePoint first = d.vertices.front();
  const LatticePoint last = d.vertices.back();
  if (first.x >= 2) fail(Errc::DivergentDiagram, "diagram ends at distance >= 2 from the y-axis");
  if (last.y >= 2) fail(Errc::DivergentDiagram, "diagram ends at distance >= 2 from the x-axis");
  CPolytope p;
  for (const auto& f : d.facets) p.facets.push_back(detail::make_cfacet(to_rational(f.left), to_rational(f.right)));
  auto& lf = p.facets.front();
  if (first.x == 1) {
    lf.left = {mpq_class(0), lf.w_degree / static_cast<unsigned long>(lf.weight[1])};
    lf.extended_left = true;
  }
  auto& rf = p.facets.back();
  if (last.y == 1) {
    rf.right = {rf.w_degree / static_cast<unsigned long>(rf.weight[0]), mpq_class(0)};
    rf.extended_right = true;
  }
  return p;
}

template <Coefficient K>
CPolytope canonical_c_polytope(const Poly<K>& f) {
  return canonical_c_polytope(newton_diagram(f));
}

/// Terms of f on a facet of a C-polytope.
template <Coefficient K>
Poly<K> terms_on_facet(const Poly<K>& f, const CFacet& facet) {
  std::vector<Term<K>> kept;
  for (const auto& t : f.terms())
    if (facet.contains({t.mono[0], t.mono[1]})) kept.push_back(t);
  return Poly<K>::from_terms(f.ring(), std::move(kept));
}

/// No point of supp(f) lies below P.
template <Coefficient K>
bool support_above(const Poly<K>& f, const CPolytope& P) {
  for (const auto& t : f.terms())
    for (const auto& facet : P.facets)
      if (facet.below(t.mono)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Volumes and combinatorial invariants

struct Volumes {
  mpq_class v2;  // area of Gamma_-
  mpq_class v1;  // total length of Gamma_- on the two axes
  mpq_class v0 = 1;
};

inline Volumes volumes(const NewtonDiagram& d) {
  if (!d.convenient) fail(Errc::NotConvenient, "volumes need a convenient diagram");
  Volumes v;
  // Shoelace over the origin and the vertices; the origin terms vanish.
  mpz_class twice_area = 0;
  for (std::size_t i = 0; i + 1 < d.vertices.size(); ++i) {
    const auto& a = d.vertices[i];
    const auto& b = d.vertices[i + 1];
    twice_area += mpz_class(static_cast<long>(b.x)) * a.y - mpz_class(static_cast<long>(a.x)) * b.y;
  }
  v.v2 = mpq_class(twice_area, 2);
  v.v2.canonicalize();
  v.v1 = mpq_class(static_cast<long>(d.vertices.back().x + d.vertices.front().y));
  return v;
}

inline std::uint64_t total_lattice_length(const NewtonDiagram& d) {
  std::uint64_t s = 0;
  for (const auto& f : d.facets) s += f.lattice_length;
  return s;
}

/// 2 V2 - V1 + 1 for a convenient diagram.
inline mpq_class newton_number_convenient(const NewtonDiagram& d) {
  const Volumes v = volumes(d);
  return 2 * v.v2 - v.v1 + 1;
}

/// V2 - V1/2 + (sum of lattice lengths)/2 for a convenient diagram.
inline mpq_class delta_n_convenient(const NewtonDiagram& d) {
  const Volumes v = volumes(d);
  mpq_class r = v.v2 - v.v1 / 2 + mpq_class(static_cast<unsigned long>(total_lattice_length(d)), 2);
  r.canonicalize();
  return r;
}

/// 2 * (largest support coordinate) + 3; larger than every support coordinate, so
/// f_m has no coefficient collisions and only trailing facets change.
template <Coefficient K>
std::uint32_t stabilization_degree(const Poly<K>& f) {
  std::uint32_t mx = 0;
  for (const auto& t : f.terms()) mx = std::max({mx, t.mono[0], t.mono[1]});
  return 2 * mx + 3;
}

namespace detail {

template <Coefficient K>
void require_newton_input(const Poly<K>& f) {
  require_planar(f.nvars());
  if (f.is_zero()) fail(Errc::ZeroInput, "zero series");
  if (!f.constant_term().is_zero()) fail(Errc::NotInMaximalIdeal, "f is a unit");
}

/// Evaluates `value` on f (convenient) or on f_m at m = m*, checking m*+1 agrees.
template <Coefficient K, class Fn>
mpq_class stabilized(const Poly<K>& f, const NewtonDiagram& d, Fn value) {
  if (d.convenient) return value(d);
  const std::uint32_t m = stabilization_degree(f);
  const mpq_class a = value(newton_diagram(add_axis_powers(f, m)));
  const mpq_class b = value(newton_diagram(add_axis_powers(f, m + 1)));
  if (a != b)
    fail(Errc::InternalInconsistency, "Newton invariant did not stabilise at m = " + std::to_string(m));
  return a;
}

}  // namespace detail

/// Value of a Newton invariant on f_m (for tests of stabilization).
template <Coefficient K>
ExtRational delta_n_at(const Poly<K>& f, std::uint32_t m) {
  const auto d = newton_diagram(add_axis_powers(f, m));
  return ExtRational(delta_n_convenient(d));
}
template <Coefficient K>
ExtNat newton_number_at(const Poly<K>& f, std::uint32_t m) {
  const auto d = newton_diagram(add_axis_powers(f, m));
  return ExtNat(newton_number_convenient(d).get_num().get_ui());
}

/// Newton number mu_N; infinity iff x^2 or y^2 divides f.
template <Coefficient K>
ExtNat newton_number(const Poly<K>& f) {
  detail::require_newton_input(f);
  const NewtonDiagram d = newton_diagram(f);
  if (d.x_div >= 2 || d.y_div >= 2) return ExtNat::infinity();
  const mpq_class v = detail::stabilized(f, d, newton_number_convenient);
  if (v < 0 || v.get_den() != 1) fail(Errc::InternalInconsistency, "Newton number is not a natural number");
  return ExtNat(v.get_num().get_ui());
}

/// delta_N; infinity iff x^2 or y^2 divides f.
template <Coefficient K>
ExtRational delta_n(const Poly<K>& f) {
  detail::require_newton_input(f);
  const NewtonDiagram d = newton_diagram(f);
  if (d.x_div >= 2 || d.y_div >= 2) return ExtRational::infinity();
  return ExtRational(detail::stabilized(f, d, delta_n_convenient));
}

/// r_N = sum of lattice lengths + max{j : x^j | f} + max{l : y^l | f}.
template <Coefficient K>
std::uint64_t r_n(const Poly<K>& f) {
  detail::require_newton_input(f);
  const NewtonDiagram d = newton_diagram(f);
  return total_lattice_length(d) + d.x_div + d.y_div;
}

}  // namespace singchar
