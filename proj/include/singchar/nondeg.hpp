#pragma once

// Non-degeneracy of plane curve singularities along the faces of the Newton
// diagram (ND, WND), along the inner faces of a C-polytope (IND), and the
// global verdicts NND, WNND, INND. Also semi-quasihomogeneity tests.
//
// Torus zeros of bivariate quasihomogeneous forms are decided by setting x = 1:
// every orbit of the weighted C*-action through a torus point meets that line,
// so the forms share a torus zero iff the gcd of their dehomogenizations, with
// t-power factors removed, is non-constant. This is stable under field extension.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "singchar/algebra.hpp"
#include "singchar/error.hpp"
#include "singchar/extended.hpp"
#include "singchar/invariants.hpp"
#include "singchar/newton.hpp"
#include "singchar/parse.hpp"
#include "singchar/poly.hpp"

namespace singchar {

namespace detail {

template <Coefficient K>
UPoly<K> dehomogenize_at_x(const Poly<K>& form) {
  std::uint32_t top = 0;
  for (const auto& t : form.terms()) top = std::max(top, t.mono[1]);
  std::vector<K> c(top + 1, K::from_int(0, form.field()));
  for (const auto& t : form.terms()) c[t.mono[1]] = c[t.mono[1]] + t.coeff;
  return UPoly<K>(form.field(), std::move(c));
}

/// Monomials of `form` on the line y = 0 (resp. x = 0).
template <Coefficient K>
bool vanishes_on_axis(const Poly<K>& form, std::size_t zero_var) {
  for (const auto& t : form.terms())
    if (t.mono[zero_var] == 0) return false;
  return true;
}

/// Common torus root, with a witness string when one exists.
template <Coefficient K>
bool torus_root_witness(const std::vector<Poly<K>>& forms, std::string* witness) {
  std::optional<UPoly<K>> g;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    UPoly<K> u = dehomogenize_at_x(f);
    g = g ? univariate_gcd(*g, u) : u.monic();
  }
  if (!g) {
    if (witness) *witness = "all forms vanish identically";
    return true;
  }
  const UPoly<K> core = g->strip_t_powers();
  if (core.degree() >= 1) {
    if (witness) *witness = "gcd at x = 1 has torus roots: " + core.to_string();
    return true;
  }
  return false;
}

}  // namespace detail

/// True iff the w-quasihomogeneous bivariate forms have a common zero with both
/// coordinates nonzero over the algebraic closure.
template <Coefficient K>
bool torus_common_root(const std::vector<Poly<K>>& forms, const WeightVector& w) {
  for (const auto& f : forms) {
    detail::require_planar(f.nvars());
    if (!is_quasihomogeneous(f, w)) fail(Errc::NotQuasihomogeneous, "form is not quasihomogeneous: " + format(f));
  }
  return detail::torus_root_witness(forms, nullptr);
}

namespace detail {

inline bool exponent_nonzero_in_field(std::int64_t e, const CoefficientField& field) {
  if (e == 0) return false;
  return field.is_rational() || static_cast<std::uint64_t>(e) % field.characteristic() != 0;
}

/// Vertex rule: a*x^alpha is non-degenerate iff some alpha_i is nonzero in K.
inline bool vertex_rule(const LatticePoint& a, const CoefficientField& field, std::string* witness) {
  if (exponent_nonzero_in_field(a.x, field) || exponent_nonzero_in_field(a.y, field)) return true;
  if (witness) *witness = "both exponents vanish in " + field.name();
  return false;
}

template <Coefficient K>
bool nd_of_form(const Poly<K>& in, std::string* witness) {
  return !torus_root_witness(jacobian_ideal(in), witness);
}

template <Coefficient K>
bool wnd_of_form(const Poly<K>& in, std::string* witness) {
  return !torus_root_witness(tjurina_ideal(in), witness);
}

/// IND of a segment face whose principal part is `in`: no torus zero of j(in),
/// and no zero on an axis the face meets.
template <Coefficient K>
bool ind_of_form(const Poly<K>& in, bool meets_x_axis, bool meets_y_axis, std::string* witness) {
  const auto j = jacobian_ideal(in);
  if (torus_root_witness(j, witness)) return false;
  if (meets_x_axis && vanishes_on_axis(j[0], 1) && vanishes_on_axis(j[1], 1)) {
    if (witness) *witness = "partials vanish on y = 0 and the face meets the x-axis";
    return false;
  }
  if (meets_y_axis && vanishes_on_axis(j[0], 0) && vanishes_on_axis(j[1], 0)) {
    if (witness) *witness = "partials vanish on x = 0 and the face meets the y-axis";
    return false;
  }
  return true;
}

}  // namespace detail

template <Coefficient K>
bool is_ND_along(const Poly<K>& f, const Face& face) {
  const Poly<K> in = initial_form(f, face);
  if (face.is_vertex()) return detail::vertex_rule(face.left, f.field(), nullptr);
  return detail::nd_of_form(in, nullptr);
}

/// ND along an edge of a supplied C-polytope.
template <Coefficient K>
bool is_ND_along(const Poly<K>& f, const CFacet& facet) {
  detail::require_planar(f.nvars());
  return detail::nd_of_form(terms_on_facet(f, facet), nullptr);
}

template <Coefficient K>
bool is_WND_along(const Poly<K>& f, const Face& face) {
  if (face.is_vertex()) fail(Errc::FaceNotOnDiagram, "WND is defined along facets only");
  return detail::wnd_of_form(initial_form(f, face), nullptr);
}

template <Coefficient K>
bool is_WND_along(const Poly<K>& f, const CFacet& facet) {
  detail::require_planar(f.nvars());
  return detail::wnd_of_form(terms_on_facet(f, facet), nullptr);
}

namespace detail {

inline bool on_axis(const LatticePoint& p) { return p.x == 0 || p.y == 0; }

}  // namespace detail

/// IND along an edge of a C-polytope (every edge is an inner face).
template <Coefficient K>
bool is_IND_along(const Poly<K>& f, const CFacet& facet) {
  detail::require_planar(f.nvars());
  return detail::ind_of_form(terms_on_facet(f, facet), facet.meets_x_axis(), facet.meets_y_axis(), nullptr);
}

/// IND along an inner face of P: a vertex off the axes, or the edge of P
/// containing the given lattice segment.
template <Coefficient K>
bool is_IND_along(const Poly<K>& f, const Face& face, const CPolytope& P) {
  if (face.is_vertex()) {
    if (detail::on_axis(face.left)) fail(Errc::NotInnerFace, "vertex lies on a coordinate axis");
    const auto verts = P.vertices();
    if (std::find(verts.begin(), verts.end(), to_rational(face.left)) == verts.end())
      fail(Errc::NotInnerFace, "vertex is not a vertex of the polytope");
    if (!face_on_diagram(newton_diagram(f), face)) return false;
    return detail::vertex_rule(face.left, f.field(), nullptr);
  }
  const CFacet* cf = P.facet_containing(face.left, face.right);
  if (!cf) fail(Errc::NotInnerFace, "segment does not lie on an edge of the polytope");
  return is_IND_along(f, *cf);
}

// ---------------------------------------------------------------------------
// Global verdicts

struct FaceVerdict {
  Face face;
  std::optional<bool> nd;   // faces of Gamma(f)
  std::optional<bool> wnd;  // facets of Gamma(f)
  std::optional<bool> ind;  // inner faces
  bool extended = false;    // facet of P prolonged to an axis
  std::string witness;
};

struct NondegReport {
  bool nnd = false;
  bool wnnd = false;
  bool innd = false;
  std::string innd_clause;  // which rule decided INND
  /// IND along every inner face of Gamma(f) itself (INND w.r.t. Gamma(f)).
  bool ind_on_diagram = false;
  std::vector<FaceVerdict> diagram_faces;
  std::vector<FaceVerdict> polytope_faces;  // canonical C-polytope, when it exists
};

/// rSQH test of f w.r.t. w and the Milnor-Orlik value prod(d/w_i - 1).
template <Coefficient K>
struct RsqhReport {
  bool is_rsqh = false;
  std::uint64_t d = 0;
  Poly<K> principal_part;
  ExtNat principal_mu;
  mpq_class mu_formula;
  bool formula_integral = false;
};

template <Coefficient K>
RsqhReport<K> rsqh_check(const Poly<K>& f, const WeightVector& w) {
  if (f.is_zero()) fail(Errc::ZeroInput, "rSQH test of the zero series");
  auto [d, in] = weighted_initial_form(f, w);
  RsqhReport<K> r{false, d, in, milnor_number(in), mpq_class(1), true};
  r.is_rsqh = r.principal_mu.is_finite();
  for (std::size_t i = 0; i < w.size(); ++i) {
    mpq_class q(static_cast<unsigned long>(d), static_cast<unsigned long>(w[i]));
    q.canonicalize();
    r.mu_formula *= q - 1;
  }
  r.formula_integral = r.mu_formula.get_den() == 1;
  return r;
}

namespace detail {

/// INND w.r.t. the canonical C-polytope; fills polytope_faces and the clause.
template <Coefficient K>
bool innd_canonical(const Poly<K>& f, const NewtonDiagram& d, NondegReport& rep) {
  if (d.facets.empty()) {
    const LatticePoint a = d.vertices.front();
    if (a.x <= 1 && a.y <= 1) {
      rep.innd_clause = "single vertex at distance <= 1 from both axes";
      return true;
    }
    rep.innd_clause = "single vertex divisible by x^2 or y^2: diagram diverges";
    return false;
  }
  CPolytope P;
  try {
    P = canonical_c_polytope(d);
  } catch (const Error& e) {
    if (e.code() != Errc::DivergentDiagram) throw;
    rep.innd_clause = std::string("no C-polytope: ") + e.what();
    return false;
  }
  // The canonical polytope supports Gamma_+(f), so supp(f) is never below it.
  if (!support_above(f, P)) fail(Errc::InternalInconsistency, "support point below the canonical C-polytope");

  bool ok = true;
  const auto verts = P.vertices();
  for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
    const LatticePoint v{verts[i].x.get_num().get_si(), verts[i].y.get_num().get_si()};
    if (on_axis(v)) continue;
    FaceVerdict fv{Face::vertex(v), std::nullopt, std::nullopt, std::nullopt, false, {}};
    fv.ind = vertex_rule(v, f.field(), &fv.witness);
    ok = ok && *fv.ind;
    rep.polytope_faces.push_back(std::move(fv));
  }
  for (std::size_t i = 0; i < P.facets.size(); ++i) {
    const CFacet& cf = P.facets[i];
    const Face face{d.facets[i].left, d.facets[i].right};
    FaceVerdict fv{face, std::nullopt, std::nullopt, std::nullopt, cf.extended(), {}};
    fv.ind = ind_of_form(terms_on_facet(f, cf), cf.meets_x_axis(), cf.meets_y_axis(), &fv.witness);
    ok = ok && *fv.ind;
    rep.polytope_faces.push_back(std::move(fv));
  }
  if (P.facets.size() == 1 && P.facets.front().meets_x_axis() && P.facets.front().meets_y_axis()) {
    const auto rs = rsqh_check(f, P.facets.front().weight);
    if (rs.is_rsqh != ok) fail(Errc::InternalInconsistency, "single-edge IND disagrees with the rSQH test");
    rep.innd_clause = "single edge meeting both axes: rSQH test";
  } else {
    rep.innd_clause = "IND along the inner faces of the canonical C-polytope";
  }
  return ok;
}

}  // namespace detail

template <Coefficient K>
NondegReport nondegeneracy(const Poly<K>& f) {
  detail::require_newton_input(f);
  const NewtonDiagram d = newton_diagram(f);
  NondegReport rep;
  rep.nnd = true;
  rep.wnnd = true;
  rep.ind_on_diagram = true;

  for (const auto& v : d.vertices) {
    FaceVerdict fv{Face::vertex(v), std::nullopt, std::nullopt, std::nullopt, false, {}};
    fv.nd = detail::vertex_rule(v, f.field(), &fv.witness);
    if (!detail::on_axis(v)) fv.ind = fv.nd;
    rep.nnd = rep.nnd && *fv.nd;
    if (fv.ind) rep.ind_on_diagram = rep.ind_on_diagram && *fv.ind;
    rep.diagram_faces.push_back(std::move(fv));
  }
  for (const auto& e : d.facets) {
    const Face face{e.left, e.right};
    const Poly<K> in = terms_on_segment(f, face);
    FaceVerdict fv{face, std::nullopt, std::nullopt, std::nullopt, false, {}};
    std::string w_nd, w_wnd, w_ind;
    fv.nd = detail::nd_of_form(in, &w_nd);
    fv.wnd = detail::wnd_of_form(in, &w_wnd);
    fv.ind = detail::ind_of_form(in, e.right.y == 0, e.left.x == 0, &w_ind);
    fv.witness = !w_nd.empty() ? w_nd : !w_wnd.empty() ? w_wnd : w_ind;
    rep.nnd = rep.nnd && *fv.nd;
    rep.wnnd = rep.wnnd && *fv.wnd;
    rep.ind_on_diagram = rep.ind_on_diagram && *fv.ind;
    rep.diagram_faces.push_back(std::move(fv));
  }
  rep.innd = detail::innd_canonical(f, d, rep);
  return rep;
}

template <Coefficient K>
bool is_NND(const Poly<K>& f) { return nondegeneracy(f).nnd; }
template <Coefficient K>
bool is_WNND(const Poly<K>& f) { return nondegeneracy(f).wnnd; }
template <Coefficient K>
bool is_INND(const Poly<K>& f) { return nondegeneracy(f).innd; }

}  // namespace singchar
