#pragma once

// Polynomial gcd in K[x, y] by primitive remainder sequences over K[x].
// Used to spot a common curve through the origin, which makes the local
// quotient infinite-dimensional without running Mora's algorithm.

#include <algorithm>
#include <vector>

#include "singchar/algebra.hpp"
#include "singchar/error.hpp"
#include "singchar/poly.hpp"

namespace singchar {

namespace detail {

/// sum_i c_i(x) y^i, no trailing zero coefficients.
template <Coefficient K>
struct YPoly {
  CoefficientField field;
  std::vector<UPoly<K>> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

template <Coefficient K>
UPoly<K> upoly_sub(const UPoly<K>& a, const UPoly<K>& b) {
  std::vector<K> v(std::max(a.coefficients().size(), b.coefficients().size()), K::from_int(0, a.field()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return UPoly<K>(a.field(), std::move(v));
}

template <Coefficient K>
YPoly<K> to_ypoly(const Poly<K>& f) {
  YPoly<K> p{f.field(), {}};
  std::vector<std::vector<K>> dense;
  for (const auto& t : f.terms()) {
    const std::size_t i = t.mono[1], j = t.mono[0];
    if (dense.size() <= i) dense.resize(i + 1);
    if (dense[i].size() <= j) dense[i].resize(j + 1, K::from_int(0, f.field()));
    dense[i][j] = dense[i][j] + t.coeff;
  }
  for (auto& d : dense) p.c.emplace_back(f.field(), std::move(d));
  p.trim();
  return p;
}

template <Coefficient K>
UPoly<K> content(const YPoly<K>& p) {
  UPoly<K> g(p.field);
  for (const auto& a : p.c)
    if (!a.is_zero()) g = g.is_zero() ? a.monic() : univariate_gcd(g, a);
  return g;
}

template <Coefficient K>
YPoly<K> primitive_part(YPoly<K> p) {
  if (p.is_zero()) return p;
  const UPoly<K> g = content(p);
  for (auto& a : p.c) a = a.divmod(g).first;
  return p;
}

/// lc(b)^k * a mod b in K[x][y], made primitive.
template <Coefficient K>
YPoly<K> primitive_prem(YPoly<K> a, const YPoly<K>& b) {
  const UPoly<K>& lb = b.c.back();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const UPoly<K> la = a.c.back();
    const int shift = a.degree() - b.degree();
    for (auto& x : a.c) x = lb * x;
    for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] = upoly_sub(a.c[i + shift], la * b.c[i]);
    a.trim();
  }
  return primitive_part(std::move(a));
}

/// gcd(f, g) in K[x, y] up to a unit of K, as (content in x, primitive part in y).
template <Coefficient K>
std::pair<UPoly<K>, YPoly<K>> bivariate_gcd(const YPoly<K>& f, const YPoly<K>& g) {
  if (f.is_zero()) return {content(g), primitive_part(g)};
  if (g.is_zero()) return {content(f), primitive_part(f)};
  const UPoly<K> c = univariate_gcd(content(f), content(g));
  YPoly<K> a = primitive_part(f), b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    YPoly<K> r = primitive_prem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return {c, a};
}

}  // namespace detail

/// True when all generators share a factor vanishing at the origin (n = 2),
/// so the ideal has a curve component through 0. False for the zero ideal.
template <Coefficient K>
bool common_curve_through_origin(const std::vector<Poly<K>>& gens) {
  if (gens.empty() || gens.front().nvars() != 2) fail(Errc::WrongArity, "common curve test needs two variables");
  bool any = false;
  UPoly<K> c(gens.front().field());
  detail::YPoly<K> p{gens.front().field(), {}};
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const auto y = detail::to_ypoly(g);
    if (!any) {
      c = detail::content(y);
      p = detail::primitive_part(y);
      any = true;
      continue;
    }
    auto [gc, gp] = detail::bivariate_gcd(p, detail::primitive_part(y));
    c = univariate_gcd(c, detail::content(y));
    p = std::move(gp);
    if (c.degree() == 0 && p.degree() == 0) return false;  // unit gcd
  }
  if (!any) return false;
  // gcd = c(x) * p(x, y); it vanishes at 0 iff one of the factors does.
  const bool c_zero = c.coeff(0).is_zero();
  const bool p_zero = !p.is_zero() && p.c.front().coeff(0).is_zero();
  return c_zero || p_zero;
}

}  // namespace singchar
