#pragma once

// Standard bases for the local degree ordering `ds` via Mora's tangent cone
// algorithm, plus staircase queries on the leading ideal.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <type_traits>
#include <vector>

#include "singchar/error.hpp"
#include "singchar/extended.hpp"
#include "singchar/poly.hpp"

namespace singchar {

/// deg(f) - deg(LM(f)).
template <Coefficient K>
std::uint64_t ecart(const Poly<K>& f) {
  return f.total_degree() - f.leading_monomial().degree();
}

namespace detail {

/// Over Q, the scalar multiple of f with coprime integer coefficients; f itself otherwise.
template <Coefficient K>
Poly<K> rescale(const Poly<K>& f) {
  if constexpr (std::is_same_v<K, Rational>) {
    if (f.is_zero()) return f;
    mpz_class den = 1, content = 0;
    for (const auto& t : f.terms()) den = lcm(den, t.coeff.value().get_den());
    for (const auto& t : f.terms()) content = gcd(content, t.coeff.value().get_num() * (den / t.coeff.value().get_den()));
    mpq_class s(den, content);
    s.canonicalize();
    if (s == 1) return f;
    return f.mul_term(Monomial::from_span(std::vector<std::uint32_t>(f.nvars(), 0)), Rational(s));
  } else {
    return f;
  }
}

}  // namespace detail

/// Mora's weak normal form: returns r with u*f = sum a_i g_i + r for some unit u,
/// where either r = 0 or LM(r) is divisible by no LM(g_i).
/// With `cut` set, the ideal is known to contain m^cut and terms of degree >= cut are dropped.
template <Coefficient K>
Poly<K> mora_normal_form(const Poly<K>& f, const std::vector<Poly<K>>& gens,
                         std::optional<std::uint64_t> cut = std::nullopt) {
  struct Reducer {
    Poly<K> poly;
    std::uint64_t ecart;
  };
  std::vector<Reducer> reducers;
  reducers.reserve(gens.size() + 8);
  for (const auto& g : gens) {
    g.check_ring(f);
    if (g.is_zero()) continue;
    // A unit generates the whole local ring.
    if (g.leading_monomial().is_one()) return Poly<K>::zero(f.ring());
    reducers.push_back({g, singchar::ecart(g)});
  }

  auto truncate = [&](Poly<K> p) { return cut ? (*cut == 0 ? Poly<K>::zero(f.ring()) : jet(p, *cut - 1)) : p; };
  Poly<K> h = detail::rescale(truncate(f));
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    const Reducer* best = nullptr;
    for (const auto& r : reducers) {
      if (!r.poly.leading_monomial().divides(lm)) continue;
      if (!best || r.ecart < best->ecart ||
          (r.ecart == best->ecart && LocalOrder{}(best->poly.leading_monomial(), r.poly.leading_monomial())))
        best = &r;
    }
    if (!best) break;
    const std::uint64_t eh = singchar::ecart(h);
    const Reducer chosen = *best;  // copy: reducers may grow below
    if (chosen.ecart > eh) reducers.push_back({h, eh});
    const Monomial q = chosen.poly.leading_monomial().quotient_of(lm);
    const K c = h.leading_coeff() / chosen.poly.leading_coeff();
    h = detail::rescale(truncate(h.sub_mul_term(q, c, chosen.poly)));
  }
  return h;
}

/// Standard basis with its minimal leading-monomial set.
template <Coefficient K>
class StdBasis {
 public:
  StdBasis(RingPtr ring, std::vector<Poly<K>> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
      const Monomial& m = g.leading_monomial();
      bool redundant = false;
      for (const auto& l : lead_) {
        if (l.divides(m)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      std::erase_if(lead_, [&](const Monomial& l) { return m.divides(l); });
      lead_.push_back(m);
    }
    std::sort(lead_.begin(), lead_.end(), LocalOrder{});
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->nvars(); }
  /// All generators, including non-minimal ones.
  const std::vector<Poly<K>>& generators() const { return gens_; }
  /// Minimal generators of the leading ideal, in LocalOrder.
  const std::vector<Monomial>& leading_monomials() const { return lead_; }

  bool in_leading_ideal(const Monomial& m) const {
    return std::any_of(lead_.begin(), lead_.end(), [&](const Monomial& l) { return l.divides(m); });
  }

  /// Exponent a_i of the smallest pure power x_i^{a_i} in the leading ideal, 0 if none.
  std::uint32_t pure_power(std::size_t i) const {
    std::uint32_t best = 0;
    for (const auto& l : lead_) {
      if (l.degree() != l[i]) continue;
      if (best == 0 || l[i] < best) best = l[i];
    }
    return best;
  }

  /// 1 in L(I), i.e. the ideal is the whole local ring.
  bool is_unit_ideal() const { return !lead_.empty() && lead_.front().is_one(); }

  /// Finite staircase complement iff every variable has a pure power in L(I).
  bool is_zero_dimensional() const {
    if (is_unit_ideal()) return true;
    for (std::size_t i = 0; i < nvars(); ++i)
      if (pure_power(i) == 0) return false;
    return true;
  }

  /// Monomials outside the leading ideal, in LocalOrder. Requires zero-dimensionality.
  std::vector<Monomial> staircase() const {
    if (!is_zero_dimensional())
      fail(Errc::NotZeroDimensional, "leading ideal lacks a pure power of some variable");
    if (is_unit_ideal()) return {};
    std::vector<std::uint32_t> box(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) box[i] = pure_power(i);
    std::vector<Monomial> out;
    std::vector<std::uint32_t> e(nvars(), 0);
    while (true) {
      Monomial m = Monomial::from_span(e);
      if (!in_leading_ideal(m)) out.push_back(m);
      std::size_t i = 0;
      while (i < nvars()) {
        if (++e[i] < box[i]) break;
        e[i] = 0;
        ++i;
      }
      if (i == nvars()) break;
    }
    std::sort(out.begin(), out.end(), LocalOrder{});
    return out;
  }

 private:
  RingPtr ring_;
  std::vector<Poly<K>> gens_;
  std::vector<Monomial> lead_;
};

namespace detail {

/// Least N with every monomial of degree N in the monomial ideal, if it is zero-dimensional.
inline std::optional<std::uint64_t> containment_degree(const std::vector<Monomial>& leads, std::size_t n) {
  std::vector<std::uint32_t> box(n, 0);
  for (const auto& l : leads)
    for (std::size_t i = 0; i < n; ++i)
      if (l.degree() == l[i] && l[i] > 0 && (box[i] == 0 || l[i] < box[i])) box[i] = l[i];
  for (auto b : box)
    if (b == 0) return std::nullopt;
  std::uint64_t top = 0;
  bool any = false;
  std::vector<std::uint32_t> e(n, 0);
  while (true) {
    const Monomial m = Monomial::from_span(e);
    if (!std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) {
      top = std::max<std::uint64_t>(top, m.degree());
      any = true;
    }
    std::size_t i = 0;
    while (i < n) {
      if (++e[i] < box[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return any ? top + 1 : 0;
}


/// Mora's tangent cone algorithm. Pairs are processed by increasing degree of
/// the lcm of their leading monomials; coprime pairs are skipped. Once the leading
/// monomials contain m^N, so does the ideal, and all later work is done modulo m^N.
template <Coefficient K>
StdBasis<K> mora_std(const std::vector<Poly<K>>& input) {
  std::vector<Poly<K>> basis;
  for (const auto& g : input)
    if (!g.is_zero()) basis.push_back(detail::rescale(g));
  if (basis.empty()) fail(Errc::ZeroIdeal, "standard basis of the zero ideal");
  const RingPtr ring = basis.front().ring();
  for (const auto& g : basis) g.check_ring(basis.front());
  const auto unit_ideal = [&] {
    return StdBasis<K>(ring, {Poly<K>::constant(ring, 1)});
  };
  for (const auto& g : basis)
    if (g.leading_monomial().is_one()) return unit_ideal();

  struct Pair {
    std::uint64_t degree;
    std::size_t seq;
    std::size_t i, j;
  };
  auto later = [](const Pair& a, const Pair& b) {
    return a.degree != b.degree ? a.degree > b.degree : a.seq > b.seq;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);
  std::size_t seq = 0;

  std::optional<std::uint64_t> cut;
  auto add_pairs = [&](std::size_t j) {
    const Monomial& mj = basis[j].leading_monomial();
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& mi = basis[i].leading_monomial();
      if (coprime(mi, mj)) continue;
      const std::uint64_t d = lcm(mi, mj).degree();
      if (cut && d >= *cut) continue;
      queue.push({d, seq++, i, j});
    }
  };

  auto update_cut = [&] {
    std::vector<Monomial> leads;
    for (const auto& g : basis) leads.push_back(g.leading_monomial());
    const auto N = detail::containment_degree(leads, ring->nvars());
    if (!N || (cut && *N >= *cut)) return;
    cut = N;
    for (auto& g : basis)
      if (g.leading_monomial().degree() < *cut) g = jet(g, *cut - 1);
  };

  // Reduce the inputs against each other first so that later pairs see fewer redundancies.
  {
    std::vector<Poly<K>> reduced;
    for (auto& g : basis) {
      Poly<K> r = reduced.empty() ? g : mora_normal_form(g, reduced);
      if (r.is_zero()) continue;
      if (r.leading_monomial().is_one()) return unit_ideal();
      reduced.push_back(std::move(r));
    }
    basis = std::move(reduced);
  }
  update_cut();
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

  while (!queue.empty()) {
    const Pair pr = queue.top();
    queue.pop();
    const Poly<K>& a = basis[pr.i];
    const Poly<K>& b = basis[pr.j];
    const Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
    if (cut && l.degree() >= *cut) continue;
    Poly<K> s = a.mul_term(a.leading_monomial().quotient_of(l), b.leading_coeff())
                    .sub_mul_term(b.leading_monomial().quotient_of(l), a.leading_coeff(), b);
    if (s.is_zero()) continue;
    Poly<K> h = mora_normal_form(s, basis, cut);
    if (h.is_zero()) continue;
    if (h.leading_monomial().is_one()) return unit_ideal();
    basis.push_back(std::move(h));
    update_cut();
    add_pairs(basis.size() - 1);
  }
  return StdBasis<K>(ring, std::move(basis));
}

}  // namespace detail

/// dim_K of the local quotient: size of the staircase complement, or infinity.
template <Coefficient K>
ExtNat quotient_dimension(const StdBasis<K>& b) {
  if (!b.is_zero_dimensional()) return ExtNat::infinity();
  return ExtNat(b.staircase().size());
}

/// Least a with m^a contained in I: 1 + max degree over the complement.
/// For a local degree ordering, x^a in I for all |a| >= that value.
template <Coefficient K>
ExtNat min_mpower_contained(const StdBasis<K>& b) {
  if (!b.is_zero_dimensional()) return ExtNat::infinity();
  const auto stairs = b.staircase();
  if (stairs.empty()) return ExtNat(0);
  return ExtNat(stairs.back().degree() + 1);
}

/// Smallest complement monomial w.r.t. LocalOrder (Singular's `highcorner`).
template <Coefficient K>
Monomial highcorner(const StdBasis<K>& b) {
  if (!b.is_zero_dimensional())
    fail(Errc::NotZeroDimensional, "highcorner requires a zero-dimensional leading ideal");
  const auto stairs = b.staircase();
  if (stairs.empty()) fail(Errc::EmptyComplement, "the ideal is the whole ring");
  return stairs.back();
}

/// Generators of m^a (all monomials of degree a).
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t a) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(nvars, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == nvars) {
      e[i] = static_cast<std::uint32_t>(left);
      out.push_back(Monomial::from_span(e));
      return;
    }
    for (std::uint64_t k = left + 1; k-- > 0;) {
      e[i] = static_cast<std::uint32_t>(k);
      rec(i + 1, left - k);
    }
  };
  rec(0, a);
  return out;
}

/// {x^b * g : |b| = a, g in gens}.
template <Coefficient K>
std::vector<Poly<K>> ideal_product_m(const std::vector<Poly<K>>& gens, std::uint64_t a) {
  std::vector<Poly<K>> out;
  if (gens.empty()) return out;
  const auto& ring = gens.front().ring();
  const K one = K::from_int(1, ring->field());
  for (const auto& m : monomials_of_degree(ring->nvars(), a))
    for (const auto& g : gens) {
      Poly<K> p = g.mul_term(m, one);
      if (!p.is_zero()) out.push_back(std::move(p));
    }
  return out;
}

namespace detail {

/// Keeps one generator per minimal leading monomial.
template <Coefficient K>
StdBasis<K> prune_to_minimal(const RingPtr& ring, const StdBasis<K>& b) {
  std::vector<Poly<K>> minimal;
  for (const auto& l : b.leading_monomials())
    for (const auto& g : b.generators())
      if (g.leading_monomial() == l) {
        minimal.push_back(g);
        break;
      }
  return StdBasis<K>(ring, std::move(minimal));
}

/// Basis of I + m^D. When its leading ideal contains m^N with N < D, Nakayama
/// gives m^N inside I, so it is a basis of I; otherwise nullopt.
template <Coefficient K>
std::optional<StdBasis<K>> std_basis_plus_mpower(const std::vector<Poly<K>>& input, std::uint64_t D) {
  const RingPtr ring = input.front().ring();
  std::vector<Poly<K>> gens;
  for (const auto& m : monomials_of_degree(ring->nvars(), D)) gens.push_back(Poly<K>::monomial(ring, m));
  gens.insert(gens.end(), input.begin(), input.end());
  const auto b = mora_std(gens);
  const auto held = containment_degree(b.leading_monomials(), ring->nvars());
  if (!held || *held >= D) return std::nullopt;
  return prune_to_minimal(ring, b);
}

/// Doubles D from 2 * (max degree) + 2 while m^D has few generators.
template <Coefficient K>
std::optional<StdBasis<K>> std_basis_truncated(const std::vector<Poly<K>>& input) {
  std::uint64_t maxdeg = 0;
  for (const auto& g : input)
    if (!g.is_zero()) maxdeg = std::max(maxdeg, g.total_degree());
  if (maxdeg == 0) return std::nullopt;
  const std::size_t n = input.front().nvars();
  const std::uint64_t limit = n <= 2 ? 256 : n == 3 ? 48 : 16;
  for (std::uint64_t D = 2 * maxdeg + 2;; D *= 2) {
    if (auto b = std_basis_plus_mpower(input, std::min(D, limit))) return b;
    if (D >= limit) return std::nullopt;
  }
}

/// Over Q, a truncated run modulo a large prime predicts N with m^N inside I;
/// the exact computation is then done for I + m^(N+1).
inline std::optional<StdBasis<Rational>> std_basis_via_prime(const std::vector<Poly<Rational>>& input) {
  const RingPtr ring = input.front().ring();
  for (std::uint64_t p : {2147483647ULL, 2147483629ULL}) {
    const CoefficientField fp(p);
    const RingPtr rp = make_ring(fp, ring->variables());
    std::vector<Poly<Zp>> images;
    bool bad = false;
    for (const auto& g : input) {
      std::vector<Term<Zp>> terms;
      for (const auto& t : g.terms()) {
        const mpz_class den = t.coeff.value().get_den();
        if (den % p == 0) bad = true;
        terms.push_back({t.mono, Zp::from_mpz(t.coeff.value().get_num(), fp) / Zp::from_mpz(den, fp)});
        if (bad) break;
      }
      if (bad) break;
      Poly<Zp> h = Poly<Zp>::from_terms(rp, std::move(terms));
      if (!h.is_zero()) images.push_back(std::move(h));
    }
    if (bad) continue;
    if (images.empty()) return std::nullopt;
    const auto probe = std_basis_truncated(images);
    if (!probe) return std::nullopt;
    const ExtNat N = min_mpower_contained(*probe);
    if (N.is_infinite() || N.value() == 0) return std::nullopt;
    return std_basis_plus_mpower(input, N.value() + 1);
  }
  return std::nullopt;
}

}  // namespace detail

/// Standard basis of the ideal generated by `input` in the localization at 0.
template <Coefficient K>
StdBasis<K> std_basis(const std::vector<Poly<K>>& input) {
  if (!input.empty()) {
    if constexpr (std::is_same_v<K, Rational>) {
      if (auto b = detail::std_basis_via_prime(input)) return std::move(*b);
    } else {
      if (auto b = detail::std_basis_truncated(input)) return std::move(*b);
    }
  }
  return detail::mora_std(input);
}

}  // namespace singchar
