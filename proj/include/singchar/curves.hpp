#pragma once

// Plane curve invariants: the multiplicity sum nu over special infinitely near
// points (chart origins of successive blowups), delta and branch number with
// exactness status, and Milnor's formula.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "singchar/error.hpp"
#include "singchar/extended.hpp"
#include "singchar/invariants.hpp"
#include "singchar/newton.hpp"
#include "singchar/nondeg.hpp"
#include "singchar/poly.hpp"

namespace singchar {

enum class Chart { Root, X, Y };

inline std::string to_string(Chart c) {
  switch (c) {
    case Chart::Root: return "root";
    case Chart::X: return "x";
    case Chart::Y: return "y";
  }
  return "?";
}

template <Coefficient K>
struct BlowupNode {
  Poly<K> strict_transform;
  std::uint64_t multiplicity = 0;
  Chart chart = Chart::Root;
  std::uint32_t depth = 0;
  std::string path;  // chart letters from the root, e.g. "xyx"
  std::vector<BlowupNode> children;
};

/// f(x, x*y) / x^m in the x-chart, f(x*y, y) / y^m in the y-chart.
template <Coefficient K>
Poly<K> strict_transform(const Poly<K>& f, Chart chart, std::uint32_t m) {
  detail::require_planar(f.nvars());
  std::vector<Term<K>> out;
  for (const auto& t : f.terms()) {
    const std::uint32_t a = t.mono[0], b = t.mono[1];
    if (a + b < m) fail(Errc::InternalInconsistency, "strict transform: term below the multiplicity");
    const Monomial mono = chart == Chart::X ? Monomial{a + b - m, b} : Monomial{a, a + b - m};
    out.push_back({mono, t.coeff});
  }
  return Poly<K>::from_terms(f.ring(), std::move(out));
}

template <Coefficient K>
struct BlowupResult {
  ExtNat nu;
  std::optional<BlowupNode<K>> tree;  // absent when nu is infinite
};

namespace detail {

template <Coefficient K>
std::uint64_t blowup_rec(BlowupNode<K>& node, std::uint32_t cap) {
  if (node.depth > cap) fail(Errc::InternalInconsistency, "blowup depth cap exceeded at chart path " + node.path);
  const ExtNat ord = node.strict_transform.order();
  node.multiplicity = ord.value();
  const std::uint64_t m = node.multiplicity;
  std::uint64_t sum = m * (m - (m > 0 ? 1 : 0)) / 2;
  if (m < 2) return sum;
  for (Chart c : {Chart::X, Chart::Y}) {
    BlowupNode<K> child{strict_transform(node.strict_transform, c, static_cast<std::uint32_t>(m)), 0, c,
                        node.depth + 1, node.path + to_string(c), {}};
    sum += blowup_rec(child, cap);
    node.children.push_back(std::move(child));
  }
  return sum;
}

}  // namespace detail

/// nu(f) = sum of m_Q (m_Q - 1) / 2 over the origin and the chart origins above it.
template <Coefficient K>
BlowupResult<K> blowup_nu(const Poly<K>& f) {
  detail::require_newton_input(f);
  const ExtRational dn = delta_n(f);
  if (dn.is_infinite()) return {ExtNat::infinity(), std::nullopt};
  const mpz_class floor_dn = dn.value().get_num() / dn.value().get_den();
  const std::uint32_t cap = static_cast<std::uint32_t>(2 * floor_dn.get_ui() + f.order().value() + 5);
  BlowupNode<K> root{f, 0, Chart::Root, 0, "", {}};
  const std::uint64_t nu = detail::blowup_rec(root, cap);
  return {ExtNat(nu), std::move(root)};
}

enum class BoundStatus { Exact, LowerBound, UpperBound };

inline std::string to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Exact: return "exact";
    case BoundStatus::LowerBound: return "lower_bound";
    case BoundStatus::UpperBound: return "upper_bound";
  }
  return "?";
}

struct DeltaValue {
  ExtRational value;
  BoundStatus status = BoundStatus::Exact;
};
struct BranchValue {
  std::uint64_t value = 0;
  BoundStatus status = BoundStatus::Exact;
};

/// delta_N(f), exact when f is WNND and a lower bound for delta otherwise.
template <Coefficient K>
DeltaValue delta_invariant(const Poly<K>& f) {
  const ExtRational dn = delta_n(f);
  return {dn, is_WNND(f) ? BoundStatus::Exact : BoundStatus::LowerBound};
}

/// r_N(f), exact when f is WNND and an upper bound for r otherwise.
template <Coefficient K>
BranchValue branch_count(const Poly<K>& f) {
  return {r_n(f), is_WNND(f) ? BoundStatus::Exact : BoundStatus::UpperBound};
}

enum class FormulaVerdict {
  MilnorEquality,     // NND: mu = 2 delta - r + 1
  NewtonEquality,     // WNND but not NND: mu_N = 2 delta - r + 1
  InequalityOnly,     // neither: only mu >= mu_N = 2 delta_N - r_N + 1
};

inline std::string to_string(FormulaVerdict v) {
  switch (v) {
    case FormulaVerdict::MilnorEquality: return "milnor_equality";
    case FormulaVerdict::NewtonEquality: return "newton_equality";
    case FormulaVerdict::InequalityOnly: return "inequality_only";
  }
  return "?";
}

template <Coefficient K>
struct CurveReport {
  ExtNat mu;
  ExtNat mu_n;
  DeltaValue delta;
  BranchValue r;
  BlowupResult<K> blowup;
  bool nnd = false;
  bool wnnd = false;
  ExtRational rhs;  // 2 delta_N - r_N + 1
  FormulaVerdict verdict = FormulaVerdict::InequalityOnly;
  bool mu_at_least_mu_n = false;
  bool mu_at_least_rhs = false;
};

/// 2 delta - r + 1, infinite when delta is.
inline ExtRational milnor_rhs(const ExtRational& delta, std::uint64_t r) {
  if (delta.is_infinite()) return ExtRational::infinity();
  return ExtRational(2 * delta.value() - mpq_class(static_cast<unsigned long>(r)) + 1);
}

inline bool ext_geq(const ExtNat& a, const ExtRational& b) {
  if (a.is_infinite()) return true;
  if (b.is_infinite()) return false;
  return mpq_class(static_cast<unsigned long>(a.value())) >= b.value();
}

inline bool ext_equal(const ExtNat& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return mpq_class(static_cast<unsigned long>(a.value())) == b.value();
}

template <Coefficient K>
CurveReport<K> milnor_formula_check(const Poly<K>& f) {
  detail::require_newton_input(f);
  CurveReport<K> rep;
  const NondegReport nd = nondegeneracy(f);
  rep.nnd = nd.nnd;
  rep.wnnd = nd.wnnd;
  rep.mu = milnor_number(f);
  rep.mu_n = newton_number(f);
  const auto status_delta = rep.wnnd ? BoundStatus::Exact : BoundStatus::LowerBound;
  const auto status_r = rep.wnnd ? BoundStatus::Exact : BoundStatus::UpperBound;
  rep.delta = {delta_n(f), status_delta};
  rep.r = {r_n(f), status_r};
  rep.blowup = blowup_nu(f);
  rep.rhs = milnor_rhs(rep.delta.value, rep.r.value);
  rep.mu_at_least_mu_n = rep.mu >= rep.mu_n;
  rep.mu_at_least_rhs = ext_geq(rep.mu, rep.rhs);

  if (rep.nnd) {
    rep.verdict = FormulaVerdict::MilnorEquality;
    if (!ext_equal(rep.mu, rep.rhs))
      fail(Errc::InternalInconsistency, "NND input violates mu = 2 delta - r + 1: mu = " + rep.mu.to_string() +
                                            ", rhs = " + rep.rhs.to_string());
  } else if (rep.wnnd) {
    rep.verdict = FormulaVerdict::NewtonEquality;
    if (!ext_equal(rep.mu_n, rep.rhs))
      fail(Errc::InternalInconsistency, "WNND input violates mu_N = 2 delta - r + 1");
  }
  return rep;
}

}  // namespace singchar
