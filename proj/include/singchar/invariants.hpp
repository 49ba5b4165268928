#pragma once

// Milnor and Tjurina numbers, isolatedness, and finite-determinacy bounds.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "singchar/bivariate.hpp"
#include "singchar/error.hpp"
#include "singchar/extended.hpp"
#include "singchar/poly.hpp"
#include "singchar/standard_basis.hpp"

namespace singchar {

/// dim_K of the local ring modulo the ideal; infinity when not zero-dimensional.
/// The zero ideal has infinite codimension.
/// Some coordinate axis lies in the zero set of every generator.
template <Coefficient K>
bool common_coordinate_axis(const std::vector<Poly<K>>& gens) {
  const std::size_t n = gens.front().nvars();
  for (std::size_t i = 0; i < n; ++i) {
    const bool on_axis = std::all_of(gens.begin(), gens.end(), [&](const Poly<K>& g) {
      return std::none_of(g.terms().begin(), g.terms().end(), [&](const Term<K>& t) {
        return t.mono.degree() == t.mono[i];
      });
    });
    if (on_axis) return true;
  }
  return false;
}

template <Coefficient K>
ExtNat local_codimension(const std::vector<Poly<K>>& gens) {
  if (std::all_of(gens.begin(), gens.end(), [](const Poly<K>& g) { return g.is_zero(); }))
    return ExtNat::infinity();
  if (std::any_of(gens.begin(), gens.end(), [](const Poly<K>& g) { return !g.constant_term().is_zero(); }))
    return ExtNat(0);
  if (common_coordinate_axis(gens)) return ExtNat::infinity();
  if (gens.front().nvars() == 2 && common_curve_through_origin(gens)) return ExtNat::infinity();
  return quotient_dimension(std_basis(gens));
}

template <Coefficient K>
ExtNat milnor_number(const Poly<K>& f) {
  if (f.is_zero()) fail(Errc::ZeroInput, "Milnor number of the zero series");
  return local_codimension(jacobian_ideal(f));
}

template <Coefficient K>
ExtNat tjurina_number(const Poly<K>& f) {
  if (f.is_zero()) fail(Errc::ZeroInput, "Tjurina number of the zero series");
  return local_codimension(tjurina_ideal(f));
}

enum class EquivalenceKind { Right, Contact };

inline std::string to_string(EquivalenceKind k) {
  return k == EquivalenceKind::Right ? "right" : "contact";
}

/// Determinacy bounds. theorem_bound = 2*k_star - ord + 2 where k_star is the
/// least k with m^{k+2} inside m^2*j(f) (right) or m*<f> + m^2*j(f) (contact);
/// corollary_bound = 2*mu - ord + 2 resp. 2*tau - ord + 2.
struct DeterminacyReport {
  EquivalenceKind kind = EquivalenceKind::Contact;
  std::uint64_t ord = 0;
  ExtNat invariant;  // mu for right, tau for contact
  ExtInt k_star;
  ExtInt theorem_bound;
  ExtInt corollary_bound;
  ExtInt classical_char0_bound;  // k_star + 1, valid in characteristic 0 only
  ExtInt best;
  std::optional<Monomial> highcorner;  // of the test ideal, when zero-dimensional and proper
};

/// The ideal whose m-power containment defines k_star.
template <Coefficient K>
std::vector<Poly<K>> determinacy_test_ideal(const Poly<K>& f, EquivalenceKind kind) {
  std::vector<Poly<K>> gens;
  if (kind == EquivalenceKind::Contact) gens = ideal_product_m(std::vector<Poly<K>>{f}, 1);
  for (auto& g : ideal_product_m(jacobian_ideal(f), 2)) gens.push_back(std::move(g));
  return gens;
}

template <Coefficient K>
DeterminacyReport determinacy_bound(const Poly<K>& f, EquivalenceKind kind) {
  if (f.is_zero()) fail(Errc::ZeroInput, "determinacy of the zero series");
  const ExtNat ord = f.order();
  if (ord.value() <= 1)
    fail(Errc::OrderTooSmall, "ord(f) <= 1: f is a unit or smooth, trivially determined");

  DeterminacyReport rep;
  rep.kind = kind;
  rep.ord = ord.value();
  const auto o = static_cast<std::int64_t>(rep.ord);

  const auto test = determinacy_test_ideal(f, kind);
  const bool zero_ideal =
      std::all_of(test.begin(), test.end(), [](const Poly<K>& g) { return g.is_zero(); });
  ExtNat a = ExtNat::infinity();
  if (!zero_ideal && !(f.nvars() == 2 && common_curve_through_origin(test))) {
    const auto basis = std_basis(test);
    a = min_mpower_contained(basis);
    if (basis.is_zero_dimensional() && !basis.is_unit_ideal()) rep.highcorner = highcorner(basis);
  }
  rep.k_star = a.is_infinite() ? ExtInt::infinity() : ExtInt(static_cast<std::int64_t>(a.value()) - 2);
  rep.theorem_bound = 2 * rep.k_star - o + ExtInt(2);
  rep.classical_char0_bound = rep.k_star + ExtInt(1);

  rep.invariant = kind == EquivalenceKind::Right ? milnor_number(f) : tjurina_number(f);
  rep.corollary_bound = 2 * ExtInt::from(rep.invariant) - o + ExtInt(2);
  rep.best = std::min(rep.theorem_bound, rep.corollary_bound);
  return rep;
}

struct Isolatedness {
  bool right_isolated = false;    // mu < infinity
  bool contact_isolated = false;  // tau < infinity
};

template <Coefficient K>
Isolatedness isolatedness(const Poly<K>& f) {
  if (f.is_zero()) fail(Errc::ZeroInput, "isolatedness of the zero series");
  if (!f.constant_term().is_zero()) fail(Errc::NotInMaximalIdeal, "f is a unit");
  return {milnor_number(f).is_finite(), tjurina_number(f).is_finite()};
}

}  // namespace singchar
