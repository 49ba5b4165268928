#pragma once

// JSON rendering of all results, and the aggregated invariant report.
// Field names are listed in docs/FORMAT.md.

#include <chrono>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "singchar/curves.hpp"
#include "singchar/error.hpp"
#include "singchar/extended.hpp"
#include "singchar/invariants.hpp"
#include "singchar/newton.hpp"
#include "singchar/nondeg.hpp"
#include "singchar/oracle.hpp"
#include "singchar/parse.hpp"

namespace singchar {

using json = nlohmann::ordered_json;

inline json to_json(const ExtNat& v) { return v.is_infinite() ? json("infinity") : json(v.value()); }
inline json to_json(const ExtInt& v) { return v.is_infinite() ? json("infinity") : json(v.value()); }
/// Integers as numbers, other rationals as "a/b".
inline json to_json(const ExtRational& v) {
  if (v.is_infinite()) return "infinity";
  if (v.is_integer() && v.value().get_num().fits_slong_p()) return v.value().get_num().get_si();
  return v.to_string();
}
inline json fraction(const mpq_class& q) { return q.get_str(); }

inline json to_json(const LatticePoint& p) { return json::array({p.x, p.y}); }
inline json to_json(const RationalPoint& p) { return json::array({fraction(p.x), fraction(p.y)}); }
inline json to_json(const WeightVector& w) { return json(w.values()); }

inline json to_json(const Face& f) {
  if (f.is_vertex()) return {{"vertex", to_json(f.left)}};
  return {{"facet", json::array({to_json(f.left), to_json(f.right)})}};
}

inline json to_json(const NewtonDiagram& d) {
  json facets = json::array();
  for (const auto& f : d.facets)
    facets.push_back({{"endpoints", json::array({to_json(f.left), to_json(f.right)})},
                      {"weight", to_json(f.weight)},
                      {"w_degree", f.w_degree},
                      {"lattice_length", f.lattice_length}});
  json verts = json::array();
  for (const auto& v : d.vertices) verts.push_back(to_json(v));
  return {{"vertices", verts}, {"facets", facets}, {"x_div", d.x_div}, {"y_div", d.y_div},
          {"convenient", d.convenient}};
}

inline json to_json(const CPolytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets)
    facets.push_back({{"endpoints", json::array({to_json(f.left), to_json(f.right)})},
                      {"weight", to_json(f.weight)},
                      {"w_degree", fraction(f.w_degree)},
                      {"kind", f.extended() ? "extended" : "original"}});
  return {{"facets", facets}};
}

inline json error_json(const Error& e) {
  return {{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
}

inline json to_json(const DeterminacyReport& r, const std::vector<std::string>& vars) {
  json j = {{"kind", to_string(r.kind)},
            {"ord", r.ord},
            {r.kind == EquivalenceKind::Right ? "mu" : "tau", to_json(r.invariant)},
            {"k_star", to_json(r.k_star)},
            {"theorem_bound", to_json(r.theorem_bound)},
            {"corollary_bound", to_json(r.corollary_bound)},
            {"classical_char0_bound", to_json(r.classical_char0_bound)},
            {"best", to_json(r.best)}};
  j["highcorner"] = r.highcorner ? json(format_monomial(*r.highcorner, vars)) : json(nullptr);
  return j;
}

inline json to_json(const FaceVerdict& v) {
  json j = {{"face", to_json(v.face)}};
  j["nd"] = v.nd ? json(*v.nd) : json(nullptr);
  j["wnd"] = v.wnd ? json(*v.wnd) : json(nullptr);
  j["ind"] = v.ind ? json(*v.ind) : json(nullptr);
  if (v.extended) j["extended"] = true;
  j["witness"] = v.witness.empty() ? json(nullptr) : json(v.witness);
  return j;
}

inline json to_json(const NondegReport& r) {
  json faces = json::array(), pfaces = json::array();
  for (const auto& f : r.diagram_faces) faces.push_back(to_json(f));
  for (const auto& f : r.polytope_faces) pfaces.push_back(to_json(f));
  return {{"NND", r.nnd},          {"WNND", r.wnnd},
          {"INND", r.innd},        {"INND_clause", r.innd_clause},
          {"IND_on_diagram", r.ind_on_diagram}, {"faces", faces},
          {"polytope_faces", pfaces}};
}

template <Coefficient K>
json to_json(const BlowupNode<K>& n) {
  json children = json::array();
  for (const auto& c : n.children) children.push_back(to_json(c));
  return {{"chart", to_string(n.chart)},
          {"path", n.path},
          {"depth", n.depth},
          {"multiplicity", n.multiplicity},
          {"strict_transform", format(n.strict_transform)},
          {"children", children}};
}

template <Coefficient K>
json to_json(const CurveReport<K>& r) {
  return {{"mu", to_json(r.mu)},
          {"mu_N", to_json(r.mu_n)},
          {"delta", {{"value", to_json(r.delta.value)}, {"status", to_string(r.delta.status)}}},
          {"r", {{"value", r.r.value}, {"status", to_string(r.r.status)}}},
          {"nu", to_json(r.blowup.nu)},
          {"NND", r.nnd},
          {"WNND", r.wnnd},
          {"milnor_formula",
           {{"mu", to_json(r.mu)},
            {"mu_N", to_json(r.mu_n)},
            {"rhs", to_json(r.rhs)},
            {"verdict", to_string(r.verdict)},
            {"mu_geq_mu_N", r.mu_at_least_mu_n},
            {"mu_geq_rhs", r.mu_at_least_rhs}}},
          {"blowup_tree", r.blowup.tree ? to_json(*r.blowup.tree) : json(nullptr)}};
}

template <Coefficient K>
json to_json(const RsqhReport<K>& r) {
  return {{"rSQH", r.is_rsqh},
          {"d", r.d},
          {"principal_part", format(r.principal_part)},
          {"principal_mu", to_json(r.principal_mu)},
          {"mu_formula", to_json(ExtRational(r.mu_formula))},
          {"formula_integral", r.formula_integral}};
}

inline json to_json(const OracleResult& r) {
  return {{"dim", r.dim},
          {"certified", r.certified},
          {"degree", r.degree},
          {"certificate_slice", r.certificate_slice < 0 ? json(nullptr) : json(r.certificate_slice)}};
}

/// Newton data of a planar series: diagram, volumes, invariants, canonical C-polytope.
template <Coefficient K>
json newton_json(const Poly<K>& f) {
  const NewtonDiagram d = newton_diagram(f);
  json j = {{"diagram", to_json(d)}};
  if (d.convenient) {
    const Volumes v = volumes(d);
    j["volumes"] = {{"V2", fraction(v.v2)}, {"V1", fraction(v.v1)}, {"V0", fraction(v.v0)}};
  } else {
    j["stabilization_degree"] = stabilization_degree(f);
  }
  j["mu_N"] = to_json(newton_number(f));
  j["delta_N"] = to_json(delta_n(f));
  j["r_N"] = r_n(f);
  try {
    j["c_polytope"] = to_json(canonical_c_polytope(d));
  } catch (const Error& e) {
    if (e.code() == Errc::InternalInconsistency) throw;
    j["c_polytope"] = error_json(e);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Aggregated report

inline const std::vector<std::string>& report_stages() {
  static const std::vector<std::string> s{"mu", "tau", "determinacy", "newton", "nondeg", "curve"};
  return s;
}

struct ReportOptions {
  std::set<std::string> skip;
  bool timing = false;
};

namespace detail {

/// Runs a stage; library errors other than InternalInconsistency become {"error": ...}.
template <class Fn>
json run_stage(Fn&& fn, json* timing, const std::string& name) {
  const auto t0 = std::chrono::steady_clock::now();
  json out;
  try {
    out = fn();
  } catch (const Error& e) {
    if (e.code() == Errc::InternalInconsistency) throw;
    out = error_json(e);
  }
  if (timing) {
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    (*timing)[name] = dt.count();
  }
  return out;
}

}  // namespace detail

template <Coefficient K>
json invariant_report(const Poly<K>& f, const ReportOptions& opt = {}) {
  if (f.is_zero()) fail(Errc::ZeroInput, "the zero series has no invariants");
  const auto& vars = f.ring()->variables();
  json timing = json::object();
  json* tp = opt.timing ? &timing : nullptr;
  auto skipped = [&](const std::string& s) { return opt.skip.count(s) > 0; };

  json r;
  r["input"] = {{"polynomial", format(f)},
                {"field", f.field().name()},
                {"characteristic", f.field().characteristic()},
                {"variables", vars}};
  r["ord"] = to_json(f.order());
  if (!skipped("mu")) r["mu"] = detail::run_stage([&] { return to_json(milnor_number(f)); }, tp, "mu");
  if (!skipped("tau")) r["tau"] = detail::run_stage([&] { return to_json(tjurina_number(f)); }, tp, "tau");
  if (!skipped("determinacy")) {
    r["determinacy"] = {
        {"right", detail::run_stage([&] { return to_json(determinacy_bound(f, EquivalenceKind::Right), vars); },
                                    tp, "determinacy_right")},
        {"contact",
         detail::run_stage([&] { return to_json(determinacy_bound(f, EquivalenceKind::Contact), vars); }, tp,
                           "determinacy_contact")}};
  }
  const bool planar = f.nvars() == 2;
  const json out_of_scope = {{"skipped", "out of scope (n>2)"}};
  auto planar_stage = [&](const std::string& name, auto fn) {
    if (skipped(name)) return;
    r[name] = planar ? detail::run_stage(fn, tp, name) : out_of_scope;
  };
  planar_stage("newton", [&] { return newton_json(f); });
  planar_stage("nondeg", [&] {
    detail::require_newton_input(f);
    return to_json(nondegeneracy(f));
  });
  planar_stage("curve", [&] { return to_json(milnor_formula_check(f)); });
  if (opt.timing) r["timing_ms"] = timing;
  return r;
}

/// Parses and reports; dispatches on the characteristic.
inline json invariant_report(std::uint64_t characteristic, const std::vector<std::string>& vars,
                             const std::string& text, const ReportOptions& opt = {}) {
  const RingPtr ring = make_ring(CoefficientField(characteristic), vars);
  if (characteristic == 0) return invariant_report(parse<Rational>(text, ring), opt);
  return invariant_report(parse<Zp>(text, ring), opt);
}

}  // namespace singchar
