#pragma once

// Seeded random inputs and the property suites behind `singchar verify`.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "singchar/curves.hpp"
#include "singchar/invariants.hpp"
#include "singchar/newton.hpp"
#include "singchar/nondeg.hpp"
#include "singchar/oracle.hpp"
#include "singchar/parse.hpp"

namespace singchar {

/// mt19937_64 with a fixed reduction, so sequences do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t n) { return g_() % n; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 g_;
};

struct RandomShape {
  std::size_t min_terms = 2;
  std::size_t max_terms = 6;
  std::uint32_t min_degree = 1;
  std::uint32_t max_degree = 8;
};

/// Sparse polynomial in the maximal ideal with small nonzero integer coefficients.
template <Coefficient K>
Poly<K> random_poly(Rng& rng, const RingPtr& ring, const RandomShape& shape) {
  const std::size_t n = ring->nvars();
  while (true) {
    const std::size_t terms = shape.min_terms + rng.below(shape.max_terms - shape.min_terms + 1);
    Poly<K> f = Poly<K>::zero(ring);
    for (std::size_t t = 0; t < terms; ++t) {
      const auto d = static_cast<std::uint32_t>(rng.range(shape.min_degree, shape.max_degree));
      std::vector<std::uint32_t> e(n, 0);
      for (std::uint32_t k = 0; k < d; ++k) ++e[rng.below(n)];
      std::int64_t c = rng.range(1, 3) * (rng.chance(1, 2) ? 1 : -1);
      f += Poly<K>::monomial(ring, Monomial::from_span(e), K::from_int(c, ring->field()));
    }
    if (!f.is_zero()) return f;
  }
}

// ---------------------------------------------------------------------------
// Suite bookkeeping

struct PropertyResult {
  std::string description;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few
  bool passed() const { return failures == 0; }

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failures;
    if (counterexamples.size() < 5) counterexamples.push_back(what);
  }
};

struct SuiteResult {
  std::string name;
  std::vector<PropertyResult> properties;
  std::vector<std::string> notes;  // informational, e.g. NND rates
  bool passed() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
  }
};

struct VerifyOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> chars{0, 2, 3, 5, 7};
};

namespace detail {

inline std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
  return seed ^ h;
}

inline std::string field_tag(std::uint64_t ch) { return ch == 0 ? "Q" : "F_" + std::to_string(ch); }

template <class Fn>
decltype(auto) with_field(std::uint64_t ch, Fn&& fn) {
  if (ch == 0) return fn(Rational::from_int(0, CoefficientField(0)));
  return fn(Zp::from_int(0, CoefficientField(ch)));
}

}  // namespace detail

/// Everything the planar suites look at, computed once per sample.
struct PlanarRecord {
  std::string poly;
  std::uint64_t characteristic = 0;
  ExtNat mu;
  ExtNat tau;
  ExtNat mu_n;
  ExtRational delta_n;
  std::uint64_t r_n = 0;
  ExtNat nu;
  NondegReport nd;
  bool convenient = false;
  std::string error;  // non-empty if a library call failed

  std::string describe() const {
    std::ostringstream s;
    s << poly << " over " << detail::field_tag(characteristic);
    if (!error.empty()) return s.str() + ": " + error;
    s << " [mu=" << mu << " mu_N=" << mu_n << " delta_N=" << delta_n << " r_N=" << r_n << " nu=" << nu
      << " NND=" << nd.nnd << " WNND=" << nd.wnnd << " INND=" << nd.innd << "]";
    return s.str();
  }
};

template <Coefficient K>
PlanarRecord planar_record(const Poly<K>& f) {
  PlanarRecord r;
  r.poly = format(f);
  r.characteristic = f.field().characteristic();
  try {
    r.mu = milnor_number(f);
    r.tau = tjurina_number(f);
    r.mu_n = newton_number(f);
    r.delta_n = delta_n(f);
    r.r_n = r_n(f);
    r.nu = blowup_nu(f).nu;
    r.nd = nondegeneracy(f);
    r.convenient = newton_diagram(f).convenient;
  } catch (const Error& e) {
    r.error = std::string(errc_name(e.code())) + ": " + e.what();
  }
  return r;
}

/// Random planar samples, cycling through the characteristics.
inline std::vector<PlanarRecord> planar_samples(const VerifyOptions& opt, const std::string& suite,
                                                const RandomShape& shape = {}) {
  Rng rng(detail::suite_seed(opt.seed, suite));
  std::vector<PlanarRecord> out;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const std::uint64_t ch = opt.chars[i % opt.chars.size()];
    const RingPtr ring = make_ring(CoefficientField(ch), {"x", "y"});
    out.push_back(detail::with_field(ch, [&]<class K>(K) { return planar_record(random_poly<K>(rng, ring, shape)); }));
  }
  return out;
}

inline ExtRational milnor_rhs_of(const PlanarRecord& r) { return milnor_rhs(r.delta_n, r.r_n); }

// ---------------------------------------------------------------------------
// Planar properties

struct PlanarProperty {
  std::string description;
  std::function<std::optional<bool>(const PlanarRecord&)> check;  // nullopt: not applicable
};

inline const std::map<std::string, PlanarProperty>& planar_properties() {
  static const std::map<std::string, PlanarProperty> props{
      {"muN-le-mu", {"μ_N ≤ μ on all samples", [](const PlanarRecord& r) -> std::optional<bool> {
                       return r.mu_n <= r.mu;
                     }}},
      {"nnd-convenient-mu", {"μ=μ_N on all NND convenient samples", [](const PlanarRecord& r) -> std::optional<bool> {
                               if (!r.nd.nnd || !r.convenient) return std::nullopt;
                               return r.mu == r.mu_n;
                             }}},
      {"nnd-mu", {"μ=μ_N on all NND samples", [](const PlanarRecord& r) -> std::optional<bool> {
                    if (!r.nd.nnd) return std::nullopt;
                    return r.mu == r.mu_n;
                  }}},
      {"nnd-innd-diagram", {"NND ⇒ IND along every inner face of Γ(f)",
                            [](const PlanarRecord& r) -> std::optional<bool> {
                              if (!r.nd.nnd) return std::nullopt;
                              return r.nd.ind_on_diagram;
                            }}},
      {"nnd-innd", {"NND and μ_N < ∞ ⇒ INND w.r.t. the canonical C-polytope",
                    [](const PlanarRecord& r) -> std::optional<bool> {
                      if (!r.nd.nnd || r.mu_n.is_infinite()) return std::nullopt;
                      return r.nd.innd;
                    }}},
      {"innd-mu", {"INND ⇒ μ=μ_N<∞", [](const PlanarRecord& r) -> std::optional<bool> {
                     if (!r.nd.innd) return std::nullopt;
                     return r.mu == r.mu_n && r.mu.is_finite();
                   }}},
      {"nu-deltaN", {"ν=δ_N whenever δ_N<∞", [](const PlanarRecord& r) -> std::optional<bool> {
                       if (r.delta_n.is_infinite()) return std::nullopt;
                       return ext_equal(r.nu, r.delta_n);
                     }}},
      {"muN-formula", {"μ_N=2δ_N−r_N+1 on all samples", [](const PlanarRecord& r) -> std::optional<bool> {
                         return ext_equal(r.mu_n, milnor_rhs_of(r));
                       }}},
      {"milnor-formula", {"NND samples satisfy μ=2δ_N−r_N+1", [](const PlanarRecord& r) -> std::optional<bool> {
                            if (!r.nd.nnd) return std::nullopt;
                            return ext_equal(r.mu, milnor_rhs_of(r));
                          }}},
      {"mu-bound", {"μ ≥ 2δ_N−r_N+1 and μ ≥ μ_N whenever μ<∞", [](const PlanarRecord& r) -> std::optional<bool> {
                      if (r.mu.is_infinite()) return std::nullopt;
                      return ext_geq(r.mu, milnor_rhs_of(r)) && r.mu >= r.mu_n;
                    }}},
      {"nd-wnd", {"ND ⇒ WND on every facet", [](const PlanarRecord& r) -> std::optional<bool> {
                    for (const auto& f : r.nd.diagram_faces)
                      if (f.wnd && *f.nd && !*f.wnd) return false;
                    return true;
                  }}},
      {"nd-wnd-char0", {"ND ⇔ WND on every facet over Q", [](const PlanarRecord& r) -> std::optional<bool> {
                          if (r.characteristic != 0) return std::nullopt;
                          for (const auto& f : r.nd.diagram_faces)
                            if (f.wnd && *f.nd != *f.wnd) return false;
                          return true;
                        }}},
      {"ind-nd", {"IND ⇒ ND on inner faces meeting no axis", [](const PlanarRecord& r) -> std::optional<bool> {
                    for (const auto& f : r.nd.diagram_faces) {
                      const bool off_axes = f.face.left.x > 0 && f.face.right.y > 0;
                      if (off_axes && f.ind && *f.ind && !*f.nd) return false;
                    }
                    return true;
                  }}},
      {"lefschetz", {"μ<∞ ⇔ τ<∞ over Q", [](const PlanarRecord& r) -> std::optional<bool> {
                       if (r.characteristic != 0) return std::nullopt;
                       return r.mu.is_finite() == r.tau.is_finite();
                     }}},
  };
  return props;
}

inline SuiteResult run_planar_suite(const std::string& name, const std::vector<std::string>& property_keys,
                                    const std::vector<PlanarRecord>& records) {
  SuiteResult res{name, {}, {}};
  PropertyResult errors{"no library errors on the samples", 0, 0, {}};
  for (const auto& r : records) errors.record(r.error.empty(), r.describe());
  res.properties.push_back(errors);
  for (const auto& key : property_keys) {
    const PlanarProperty& p = planar_properties().at(key);
    PropertyResult pr{p.description, 0, 0, {}};
    for (const auto& r : records) {
      if (!r.error.empty()) continue;
      if (auto ok = p.check(r)) pr.record(*ok, r.describe());
    }
    res.properties.push_back(std::move(pr));
  }
  // Empirical NND rates per characteristic.
  std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> rate;
  for (const auto& r : records) {
    if (!r.error.empty()) continue;
    auto& [nnd, total] = rate[r.characteristic];
    nnd += r.nd.nnd ? 1 : 0;
    ++total;
  }
  for (const auto& [ch, v] : rate)
    res.notes.push_back("NND rate over " + detail::field_tag(ch) + ": " + std::to_string(v.first) + "/" +
                        std::to_string(v.second));
  return res;
}

// ---------------------------------------------------------------------------
// Stabilization of mu_N and delta_N along f_m

template <Coefficient K>
Poly<K> random_nonconvenient(Rng& rng, const RingPtr& ring) {
  while (true) {
    Poly<K> f = random_poly<K>(rng, ring, {2, 6, 2, 8});
    // Drop the pure powers of one variable.
    const std::size_t axis = rng.below(2);
    std::vector<Term<K>> kept;
    for (const auto& t : f.terms())
      if (t.mono[axis] > 0) kept.push_back(t);
    Poly<K> g = Poly<K>::from_terms(ring, std::move(kept));
    if (g.is_zero()) continue;
    const NewtonDiagram d = newton_diagram(g);
    if (d.convenient || d.x_div >= 2 || d.y_div >= 2) continue;
    if (d.vertices.front().x >= 2 || d.vertices.back().y >= 2) continue;
    return g;
  }
}

inline SuiteResult run_stabilization_suite(const VerifyOptions& opt) {
  SuiteResult res{"stabilization", {}, {}};
  PropertyResult pr{"μ_N(f_m), δ_N(f_m) constant at m*, m*+1, m*+7 on non-convenient samples", 0, 0, {}};
  Rng rng(detail::suite_seed(opt.seed, "stabilization"));
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const std::uint64_t ch = opt.chars[i % opt.chars.size()];
    const RingPtr ring = make_ring(CoefficientField(ch), {"x", "y"});
    detail::with_field(ch, [&]<class K>(K) {
      const Poly<K> f = random_nonconvenient<K>(rng, ring);
      const std::uint32_t m = stabilization_degree(f);
      const ExtNat mu = newton_number(f);
      const ExtRational dn = delta_n(f);
      bool ok = true;
      for (std::uint32_t k : {m, m + 1, m + 7})
        ok = ok && newton_number_at(f, k) == mu && delta_n_at(f, k) == dn;
      pr.record(ok, format(f) + " over " + detail::field_tag(ch));
      return 0;
    });
  }
  res.properties.push_back(pr);
  return res;
}

// ---------------------------------------------------------------------------
// Oracle agreement

template <Coefficient K>
std::optional<std::vector<Poly<K>>> random_zero_dim_ideal(Rng& rng, const RingPtr& ring) {
  const std::size_t n = ring->nvars();
  std::vector<Poly<K>> gens;
  if (n == 2 && rng.chance(1, 2)) {
    const Poly<K> f = random_poly<K>(rng, ring, {2, 5, 2, 7});
    gens = rng.chance(1, 2) ? jacobian_ideal(f) : tjurina_ideal(f);
  } else if (n == 2) {
    for (std::size_t i = 0; i < n; ++i) gens.push_back(random_poly<K>(rng, ring, {1, 3, 1, 5}));
  } else {
    // x_i^a_i plus terms of equal or higher degree; mostly zero-dimensional.
    const K one = K::from_int(1, ring->field());
    for (std::size_t i = 0; i < n; ++i) {
      const auto a = static_cast<std::uint32_t>(rng.range(1, 3));
      Poly<K> g = Poly<K>::monomial(ring, Monomial::variable(n, i, a), one);
      g += random_poly<K>(rng, ring, {1, 3, a, 4});
      gens.push_back(std::move(g));
    }
  }
  if (std::all_of(gens.begin(), gens.end(), [](const Poly<K>& g) { return g.is_zero(); })) return std::nullopt;
  if (n == 2 && common_curve_through_origin(gens)) return std::nullopt;
  if (!std_basis(gens).is_zero_dimensional()) return std::nullopt;
  return gens;
}

struct OracleSuiteCounts {
  std::size_t planar = 100;
  std::size_t spatial = 30;
};

inline SuiteResult run_oracle_suite(const VerifyOptions& opt, OracleSuiteCounts counts) {
  SuiteResult res{"oracle", {}, {}};
  PropertyResult agree{"certified oracle dimension = standard basis dimension", 0, 0, {}};
  PropertyResult certified{"oracle certifies within its degree ceiling", 0, 0, {}};
  PropertyResult monotone{"truncated dimension non-decreasing in D and constant once certified", 0, 0, {}};
  Rng rng(detail::suite_seed(opt.seed, "oracle"));
  std::size_t done = 0;
  for (std::size_t i = 0; done < counts.planar + counts.spatial; ++i) {
    const std::uint64_t ch = opt.chars[i % opt.chars.size()];
    const bool spatial = done >= counts.planar;
    const RingPtr ring =
        make_ring(CoefficientField(ch), spatial ? std::vector<std::string>{"x", "y", "z"} : std::vector<std::string>{"x", "y"});
    detail::with_field(ch, [&]<class K>(K) {
      const auto gens = random_zero_dim_ideal<K>(rng, ring);
      if (!gens) return 0;
      ++done;
      std::string what = "{";
      for (const auto& g : *gens) what += (what.size() > 1 ? ", " : "") + format(g);
      what += "} over " + detail::field_tag(ch);
      const ExtNat sb = local_codimension(*gens);
      const OracleResult o = oracle_dimension(*gens, spatial ? 40 : 96);
      certified.record(o.certified, what);
      if (o.certified) agree.record(sb == ExtNat(o.dim), what + ": oracle " + std::to_string(o.dim) + ", std " + sb.to_string());
      // Dimension along a few truncation degrees up to the certified one.
      if (o.certified && !spatial) {
        std::uint64_t prev = 0;
        bool ok = true;
        for (std::uint64_t D = 1; D <= o.degree + 2; ++D) {
          const auto r = quotient_dim_truncated(*gens, D);
          if (r.dim < prev) ok = false;
          if (r.certified && r.dim != o.dim) ok = false;
          prev = r.dim;
        }
        monotone.record(ok, what);
      }
      return 0;
    });
  }
  res.properties = {agree, certified, monotone};
  return res;
}

// ---------------------------------------------------------------------------
// Milnor-Orlik formula on (semi-)quasihomogeneous series

template <Coefficient K>
struct QhSample {
  Poly<K> f;
  WeightVector w;
};

/// A form of type (d; w) has finite mu iff its Milnor algebra vanishes above
/// weighted degree sum(d - 2 w_i), i.e. iff m^N lies in j(in) + m^(N+1) for the
/// N below.
template <Coefficient K>
bool qh_isolated(const Poly<K>& in, const WeightVector& w, std::uint64_t d) {
  std::uint64_t socle = 0, wmin = d;
  for (std::size_t i = 0; i < w.size(); ++i) {
    socle += d - 2 * w[i];
    wmin = std::min(wmin, w[i]);
  }
  const std::uint64_t N = socle / wmin + 1;
  return detail::std_basis_plus_mpower(jacobian_ideal(in), N + 1).has_value();
}

/// Quasihomogeneous f (plus, half of the time, terms of higher weighted degree)
/// with exponents a_i = d / w_i not divisible by the characteristic.
template <Coefficient K>
QhSample<K> random_sqh(Rng& rng, const RingPtr& ring) {
  const std::size_t n = ring->nvars();
  const std::uint64_t p = ring->field().characteristic();
  while (true) {
    std::vector<std::uint64_t> a(n);
    for (auto& ai : a) {
      do {
        ai = static_cast<std::uint64_t>(rng.range(2, n == 2 ? 7 : 4));
      } while (p != 0 && ai % p == 0);
    }
    std::uint64_t d = 1;
    for (auto ai : a) d = std::lcm(d, ai);
    std::vector<std::uint64_t> wv(n);
    for (std::size_t i = 0; i < n; ++i) wv[i] = d / a[i];
    const WeightVector w(wv);

    // All monomials of weighted degree d (and d + 1 .. d + 2 for the tail).
    std::vector<Monomial> level, tail;
    std::vector<std::uint32_t> e(n, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t used) {
      if (i == n) {
        const Monomial m = Monomial::from_span(e);
        if (used == d) level.push_back(m);
        else if (used > d && used <= d + 2 * wv.back()) tail.push_back(m);
        return;
      }
      for (std::uint32_t k = 0; used + k * wv[i] <= d + 2 * wv.back(); ++k) {
        e[i] = k;
        rec(i + 1, used + k * wv[i]);
      }
      e[i] = 0;
    };
    rec(0, 0);

    Poly<K> f = Poly<K>::zero(ring);
    for (std::size_t i = 0; i < n; ++i)
      f += Poly<K>::monomial(ring, Monomial::variable(n, i, static_cast<std::uint32_t>(a[i])),
                             K::from_int(rng.range(1, 3), ring->field()));
    for (const auto& m : level)
      if (rng.chance(1, 3)) f += Poly<K>::monomial(ring, m, K::from_int(rng.range(-3, 3), ring->field()));
    if (rng.chance(1, 2))
      for (const auto& m : tail)
        if (rng.chance(1, 4)) f += Poly<K>::monomial(ring, m, K::from_int(rng.range(-3, 3), ring->field()));
    if (f.is_zero()) continue;
    const auto [deg, in] = weighted_initial_form(f, w);
    if (deg != d || !qh_isolated(in, w, d)) continue;
    return {f, w};
  }
}

inline SuiteResult run_milnor_orlik_suite(const VerifyOptions& opt) {
  SuiteResult res{"milnor-orlik", {}, {}};
  PropertyResult pr{"μ(f) = Π(d/w_i − 1) for rSQH samples", 0, 0, {}};
  Rng rng(detail::suite_seed(opt.seed, "milnor-orlik"));
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const std::uint64_t ch = opt.chars[i % opt.chars.size()];
    const bool spatial = i % 3 == 2;
    const RingPtr ring =
        make_ring(CoefficientField(ch), spatial ? std::vector<std::string>{"x", "y", "z"} : std::vector<std::string>{"x", "y"});
    detail::with_field(ch, [&]<class K>(K) {
      const auto s = random_sqh<K>(rng, ring);
      const auto rs = rsqh_check(s.f, s.w);
      const ExtNat mu = milnor_number(s.f);
      const bool ok = rs.is_rsqh && rs.formula_integral && mu == ExtNat(rs.mu_formula.get_num().get_ui());
      std::ostringstream what;
      what << format(s.f) << " over " << detail::field_tag(ch) << " w=(";
      for (std::size_t k = 0; k < s.w.size(); ++k) what << (k ? "," : "") << s.w[k];
      what << "): mu=" << mu << " formula=" << rs.mu_formula.get_str();
      pr.record(ok, what.str());
      return 0;
    });
  }
  res.properties.push_back(pr);
  return res;
}

// ---------------------------------------------------------------------------
// Finiteness of mu and tau over Q

inline SuiteResult run_lefschetz_suite(const VerifyOptions& opt) {
  SuiteResult res{"lefschetz", {}, {}};
  PropertyResult pr{"μ<∞ ⇔ τ<∞ over Q", 0, 0, {}};
  Rng rng(detail::suite_seed(opt.seed, "lefschetz"));
  std::size_t finite = 0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const bool spatial = i % 4 == 3;
    const RingPtr ring =
        make_ring(CoefficientField(0), spatial ? std::vector<std::string>{"x", "y", "z"} : std::vector<std::string>{"x", "y"});
    const RandomShape shape{2, spatial ? 4u : 6u, 2, spatial ? 4u : 8u};
    Poly<Rational> f = random_poly<Rational>(rng, ring, shape);
    // A quarter of the samples get a repeated factor and are not isolated.
    if (rng.chance(1, 4)) {
      const Poly<Rational> h = random_poly<Rational>(rng, ring, {1, 2, 1, 1});
      f = random_poly<Rational>(rng, ring, {1, 3, 1, 3}) * h * h;
    }
    const ExtNat mu = milnor_number(f), tau = tjurina_number(f);
    finite += mu.is_finite() ? 1 : 0;
    pr.record(mu.is_finite() == tau.is_finite(), format(f) + ": mu=" + mu.to_string() + " tau=" + tau.to_string());
  }
  res.properties.push_back(pr);
  res.notes.push_back("isolated samples: " + std::to_string(finite) + "/" + std::to_string(opt.samples));
  return res;
}

// ---------------------------------------------------------------------------
// Dispatch

inline const std::map<std::string, std::vector<std::string>>& planar_suites() {
  static const std::map<std::string, std::vector<std::string>> s{
      {"kouchnirenko", {"muN-le-mu", "nnd-convenient-mu", "nnd-mu"}},
      {"nu-deltaN", {"nu-deltaN"}},
      {"milnor-formula", {"milnor-formula"}},
      {"muN-formula", {"muN-formula"}},
      {"mu-bound", {"mu-bound"}},
      {"nnd-innd", {"nnd-innd-diagram", "nnd-innd", "innd-mu"}},
      {"nd-wnd", {"nd-wnd", "nd-wnd-char0", "ind-nd"}},
  };
  return s;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : planar_suites()) names.push_back(k);
  for (const char* s : {"stabilization", "oracle", "lefschetz", "milnor-orlik"}) names.push_back(s);
  return names;
}

/// Runs one suite by name, or every suite for "all".
inline std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "all") {
    std::vector<SuiteResult> out;
    for (const auto& n : suite_names()) {
      auto r = run_suite(n, opt);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  if (opt.chars.empty()) fail(Errc::InvalidCharacteristic, "no characteristics given");
  for (auto ch : opt.chars) (void)CoefficientField(ch);
  if (auto it = planar_suites().find(name); it != planar_suites().end())
    return {run_planar_suite(name, it->second, planar_samples(opt, name))};
  if (name == "stabilization") return {run_stabilization_suite(opt)};
  if (name == "oracle") {
    // Split the sample budget 10:3 between two and three variables.
    const std::size_t spatial = std::max<std::size_t>(1, opt.samples * 3 / 13);
    return {run_oracle_suite(opt, {opt.samples - std::min(spatial, opt.samples), std::min(spatial, opt.samples)})};
  }
  if (name == "lefschetz") return {run_lefschetz_suite(opt)};
  if (name == "milnor-orlik") return {run_milnor_orlik_suite(opt)};
  fail(Errc::SyntaxError, "unknown suite '" + name + "'");
}

inline std::string render(const SuiteResult& r) {
  std::ostringstream out;
  out << "[" << r.name << "]\n";
  for (const auto& p : r.properties) {
    out << p.description << ": " << (p.passed() ? "PASS" : "FAIL") << " (" << p.checked << " checked";
    if (!p.passed()) out << ", " << p.failures << " failed";
    out << ")\n";
    for (const auto& c : p.counterexamples) out << "  counterexample: " << c << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace singchar
