#pragma once

// Sparse multivariate polynomials standing in for power-series jets.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "singchar/algebra.hpp"
#include "singchar/error.hpp"
#include "singchar/extended.hpp"

namespace singchar {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector x^a with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars == 0 || nvars > kMaxVars)
      fail(Errc::TooManyVariables, "number of variables must be in 1.." + std::to_string(kMaxVars));
  }
  Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (auto e : exps) set(i++, e);
  }
  static Monomial from_span(std::span<const std::uint32_t> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }
  static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
  }

  std::size_t size() const { return n_; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, std::uint32_t v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = v;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) r.set(i, o.e_[i] - e_[i]);
    return r;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::max(a.e_[i], b.e_[i]));
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  std::vector<std::uint32_t> exponents() const { return {e_.begin(), e_.begin() + n_}; }

 private:
  std::array<std::uint32_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint64_t deg_ = 0;
};

/// Negative-degree reverse-lexicographic ordering (Singular's `ds`).
/// Lower total degree is larger; 1 is the largest monomial.
struct LocalOrder {
  /// Positive if a > b, negative if a < b, zero if equal.
  static int compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  /// Strict "greater than"; sorting with this puts the leading monomial first.
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

/// Presentation order: increasing degree, then decreasing lexicographic exponent.
struct DisplayOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

/// Positive integer weights; the weighted degree of x^a is w.a.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<std::uint64_t> w) : w_(std::move(w)) {
    for (auto v : w_)
      if (v == 0) fail(Errc::NotQuasihomogeneous, "weights must be positive");
  }
  WeightVector(std::initializer_list<std::uint64_t> w) : WeightVector(std::vector<std::uint64_t>(w)) {}

  std::size_t size() const { return w_.size(); }
  std::uint64_t operator[](std::size_t i) const { return w_[i]; }
  const std::vector<std::uint64_t>& values() const { return w_; }

  std::uint64_t degree(const Monomial& m) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) d += w_[i] * m[i];
    return d;
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::uint64_t> w_;
};

/// Variable names plus ground field.
class Ring {
 public:
  Ring(CoefficientField field, std::vector<std::string> vars)
      : field_(field), vars_(std::move(vars)) {
    if (vars_.empty() || vars_.size() > kMaxVars)
      fail(Errc::TooManyVariables, "number of variables must be in 1.." + std::to_string(kMaxVars));
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].empty()) fail(Errc::SyntaxError, "empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[i] == vars_[j]) fail(Errc::SyntaxError, "duplicate variable " + vars_[i]);
    }
  }

  const CoefficientField& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }

  /// Compact "x2y" notation is allowed only for single-letter names.
  bool compact_names() const {
    return std::all_of(vars_.begin(), vars_.end(), [](const std::string& v) { return v.size() == 1; });
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_;
  }

 private:
  CoefficientField field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(CoefficientField field, std::vector<std::string> vars) {
  return std::make_shared<const Ring>(field, std::move(vars));
}

template <Coefficient K>
struct Term {
  Monomial mono;
  K coeff;
};

/// Sparse polynomial. Terms are kept sorted by LocalOrder, leading term first,
/// with no zero coefficients.
template <Coefficient K>
class Poly {
 public:
  using coeff_type = K;

  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const K& c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
  }
  static Poly constant(RingPtr ring, std::int64_t c) {
    return constant(ring, K::from_int(c, ring->field()));
  }
  static Poly monomial(RingPtr ring, const Monomial& m, const K& c) {
    Poly p(ring);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  static Poly monomial(RingPtr ring, const Monomial& m) {
    return monomial(ring, m, K::from_int(1, ring->field()));
  }
  static Poly variable(RingPtr ring, std::size_t i) {
    return monomial(ring, Monomial::variable(ring->nvars(), i));
  }
  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static Poly from_terms(RingPtr ring, std::vector<Term<K>> terms) {
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const CoefficientField& field() const { return ring_->field(); }
  std::size_t nvars() const { return ring_->nvars(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<K>>& terms() const { return terms_; }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const K& leading_coeff() const { return terms_.front().coeff; }

  K coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term<K>& t, const Monomial& x) { return LocalOrder{}(t.mono, x); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return K::from_int(0, field());
  }

  /// Largest total degree in the support; 0 for the zero polynomial.
  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Minimal total degree of the support; infinity for 0.
  ExtNat order() const {
    if (terms_.empty()) return ExtNat::infinity();
    return ExtNat(terms_.front().mono.degree());
  }

  /// Constant term (coefficient of 1).
  K constant_term() const { return coefficient(Monomial(nvars())); }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    std::vector<Term<K>> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return from_terms(a.ring_, std::move(out));
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend Poly operator*(const K& c, const Poly& a) {
    if (c.is_zero()) return Poly(a.ring_);
    Poly r = a;
    for (auto& t : r.terms_) t.coeff = c * t.coeff;
    r.drop_zeros();
    return r;
  }

  /// c * x^m * this; order is preserved since monomial orderings are multiplicative.
  Poly mul_term(const Monomial& m, const K& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      K v = c * t.coeff;
      if (!v.is_zero()) r.terms_.push_back({m * t.mono, v});
    }
    return r;
  }

  /// this - c * x^m * g, as a single merge.
  Poly sub_mul_term(const Monomial& m, const K& c, const Poly& g) const {
    check_ring(g);
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto i = terms_.begin();
    auto j = g.terms_.begin();
    while (i != terms_.end() || j != g.terms_.end()) {
      if (j == g.terms_.end()) {
        r.terms_.push_back(*i++);
        continue;
      }
      Monomial mj = m * j->mono;
      int cmp = i == terms_.end() ? -1 : LocalOrder::compare(i->mono, mj);
      if (cmp > 0) {
        r.terms_.push_back(*i++);
      } else if (cmp < 0) {
        r.terms_.push_back({mj, -(c * j->coeff)});
        ++j;
      } else {
        K v = i->coeff - c * j->coeff;
        if (!v.is_zero()) r.terms_.push_back({mj, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Poly pow(std::uint64_t e) const {
    Poly result = constant(ring_, 1);
    Poly base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (!(*a.ring_ == *b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    }
    return true;
  }

  void check_ring(const Poly& o) const {
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
      fail(Errc::RingMismatch, "polynomials belong to different rings");
  }

 private:
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    a.check_ring(b);
    Poly r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      int cmp;
      if (i == a.terms_.end()) cmp = -1;
      else if (j == b.terms_.end()) cmp = 1;
      else cmp = LocalOrder::compare(i->mono, j->mono);
      if (cmp > 0) {
        r.terms_.push_back(*i++);
      } else if (cmp < 0) {
        r.terms_.push_back({j->mono, subtract ? -j->coeff : j->coeff});
        ++j;
      } else {
        K v = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
        if (!v.is_zero()) r.terms_.push_back({i->mono, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term<K>& a, const Term<K>& b) { return LocalOrder{}(a.mono, b.mono); });
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = out.back().coeff + t.coeff;
      } else {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
    drop_zeros();
  }

  void drop_zeros() {
    std::erase_if(terms_, [](const Term<K>& t) { return t.coeff.is_zero(); });
  }

  RingPtr ring_;
  std::vector<Term<K>> terms_;
};

/// Terms of total degree <= k.
template <Coefficient K>
Poly<K> jet(const Poly<K>& f, std::uint64_t k) {
  std::vector<Term<K>> kept;
  for (const auto& t : f.terms())
    if (t.mono.degree() <= k) kept.push_back(t);
  return Poly<K>::from_terms(f.ring(), std::move(kept));
}

/// Formal partial derivative with respect to variable i (0-based).
template <Coefficient K>
Poly<K> partial_derivative(const Poly<K>& f, std::size_t i) {
  if (i >= f.nvars()) fail(Errc::UnknownVariable, "variable index out of range");
  std::vector<Term<K>> out;
  for (const auto& t : f.terms()) {
    const std::uint32_t e = t.mono[i];
    if (e == 0) continue;
    K c = t.coeff.times(e);
    if (c.is_zero()) continue;
    Monomial m = t.mono;
    m.set(i, e - 1);
    out.push_back({m, c});
  }
  return Poly<K>::from_terms(f.ring(), std::move(out));
}

/// [f_{x_1}, ..., f_{x_n}], zero entries retained.
template <Coefficient K>
std::vector<Poly<K>> jacobian_ideal(const Poly<K>& f) {
  std::vector<Poly<K>> out;
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(partial_derivative(f, i));
  return out;
}

/// [f, f_{x_1}, ..., f_{x_n}].
template <Coefficient K>
std::vector<Poly<K>> tjurina_ideal(const Poly<K>& f) {
  std::vector<Poly<K>> out{f};
  for (auto& g : jacobian_ideal(f)) out.push_back(std::move(g));
  return out;
}

/// f + x_1^m + ... + x_n^m. Sets *collision when some x_i^m coefficient cancels.
template <Coefficient K>
Poly<K> add_axis_powers(const Poly<K>& f, std::uint32_t m, bool* collision = nullptr) {
  if (m == 0) fail(Errc::SyntaxError, "axis power must be at least 1");
  Poly<K> r = f;
  bool hit = false;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    Monomial xm = Monomial::variable(f.nvars(), i, m);
    K before = f.coefficient(xm);
    if (!before.is_zero() && (before + K::from_int(1, f.field())).is_zero()) hit = true;
    r += Poly<K>::monomial(f.ring(), xm);
  }
  if (collision) *collision = hit;
  return r;
}

/// Truncated product: only terms of degree <= k are kept.
template <Coefficient K>
Poly<K> mul_jet(const Poly<K>& a, const Poly<K>& b, std::uint64_t k) {
  a.check_ring(b);
  std::vector<Term<K>> out;
  for (const auto& s : a.terms()) {
    if (s.mono.degree() > k) break;
    for (const auto& t : b.terms()) {
      if (s.mono.degree() + t.mono.degree() > k) break;
      out.push_back({s.mono * t.mono, s.coeff * t.coeff});
    }
  }
  return Poly<K>::from_terms(a.ring(), std::move(out));
}

namespace detail {

/// Rank of a square matrix over K via Gaussian elimination.
template <Coefficient K>
std::size_t matrix_rank(std::vector<std::vector<K>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    K inv = a[rank][c].inverse();
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      K factor = a[r][c] * inv;
      for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] - factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// f(images[0], ..., images[n-1]). The images must lie in m and have an
/// invertible linear part, i.e. define a local automorphism.
/// When trunc is given, intermediate products are cut at that degree.
template <Coefficient K>
Poly<K> substitute(const Poly<K>& f, const std::vector<Poly<K>>& images,
                   std::optional<std::uint64_t> trunc = std::nullopt) {
  const std::size_t n = f.nvars();
  if (images.size() != n) fail(Errc::WrongArity, "substitution needs one image per variable");
  const auto& field = f.field();
  std::vector<std::vector<K>> linear(n, std::vector<K>(n, K::from_int(0, field)));
  for (std::size_t i = 0; i < n; ++i) {
    images[i].check_ring(f);
    if (!images[i].constant_term().is_zero())
      fail(Errc::NotLocal, "substitution image has a nonzero constant term");
    for (std::size_t j = 0; j < n; ++j)
      linear[i][j] = images[i].coefficient(Monomial::variable(n, j));
  }
  if (detail::matrix_rank(linear) != n)
    fail(Errc::NotInvertible, "linear part of the substitution is singular");

  auto mul = [&](const Poly<K>& a, const Poly<K>& b) { return trunc ? mul_jet(a, b, *trunc) : a * b; };
  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Poly<K>>> powers(n, std::vector<Poly<K>>{Poly<K>::constant(f.ring(), 1)});
  auto power = [&](std::size_t i, std::uint32_t e) -> const Poly<K>& {
    while (powers[i].size() <= e) powers[i].push_back(mul(powers[i].back(), images[i]));
    return powers[i][e];
  };

  Poly<K> result = Poly<K>::zero(f.ring());
  for (const auto& t : f.terms()) {
    if (trunc && t.mono.degree() > *trunc) continue;
    Poly<K> prod = Poly<K>::constant(f.ring(), t.coeff);
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i]) prod = mul(prod, power(i, t.mono[i]));
    result += prod;
  }
  return result;
}

/// Largest j with x_i^j dividing f (f nonzero).
template <Coefficient K>
std::uint32_t variable_divisibility(const Poly<K>& f, std::size_t i) {
  if (f.is_zero()) fail(Errc::ZeroInput, "divisibility of the zero polynomial");
  std::uint32_t d = UINT32_MAX;
  for (const auto& t : f.terms()) d = std::min(d, t.mono[i]);
  return d;
}

/// Least weighted degree over the support, and the terms attaining it.
template <Coefficient K>
std::pair<std::uint64_t, Poly<K>> weighted_initial_form(const Poly<K>& f, const WeightVector& w) {
  if (f.is_zero()) fail(Errc::ZeroInput, "initial form of the zero polynomial");
  if (w.size() != f.nvars()) fail(Errc::WrongArity, "weight vector length differs from number of variables");
  std::uint64_t d = UINT64_MAX;
  for (const auto& t : f.terms()) d = std::min(d, w.degree(t.mono));
  std::vector<Term<K>> kept;
  for (const auto& t : f.terms())
    if (w.degree(t.mono) == d) kept.push_back(t);
  return {d, Poly<K>::from_terms(f.ring(), std::move(kept))};
}

/// True when every term has the same w-degree (zero counts as quasihomogeneous).
template <Coefficient K>
bool is_quasihomogeneous(const Poly<K>& f, const WeightVector& w) {
  if (f.is_zero()) return true;
  const std::uint64_t d = w.degree(f.terms().front().mono);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Term<K>& t) { return w.degree(t.mono) == d; });
}

}  // namespace singchar
