#pragma once

// Exact scalars over Q and F_p, and dense univariate polynomials with gcd.

#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "singchar/error.hpp"

namespace singchar {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Ground field descriptor: Q (characteristic 0) or F_p.
class CoefficientField {
 public:
  /// Largest supported prime; residues and their products must fit 64 bits.
  static constexpr std::uint64_t kMaxPrime = (1ULL << 31) - 1;

  CoefficientField() = default;

  explicit CoefficientField(std::uint64_t characteristic) : char_(characteristic) {
    if (characteristic == 0) return;
    if (!is_prime(characteristic))
      fail(Errc::InvalidCharacteristic, "characteristic must be 0 or prime");
    if (characteristic > kMaxPrime)
      fail(Errc::InvalidCharacteristic,
           "characteristic too large (maximum " + std::to_string(kMaxPrime) + ")");
  }

  static CoefficientField rationals() { return CoefficientField(); }

  std::uint32_t characteristic() const { return static_cast<std::uint32_t>(char_); }
  bool is_rational() const { return char_ == 0; }

  std::string name() const {
    return char_ == 0 ? std::string("Q") : "F_" + std::to_string(char_);
  }

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

 private:
  std::uint64_t char_ = 0;
};

/// Residue modulo a prime, stored in [0, p).
class Zp {
 public:
  Zp() = default;

  static Zp from_int(std::int64_t v, const CoefficientField& field) {
    const std::uint32_t p = field.characteristic();
    if (p == 0) fail(Errc::FieldMismatch, "Zp requires a prime field");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return Zp(static_cast<std::uint32_t>(r), p);
  }

  static Zp from_mpz(const mpz_class& v, const CoefficientField& field) {
    const std::uint32_t p = field.characteristic();
    if (p == 0) fail(Errc::FieldMismatch, "Zp requires a prime field");
    mpz_class r = v % p;
    if (r < 0) r += p;
    return Zp(static_cast<std::uint32_t>(r.get_ui()), p);
  }

  static Zp zero(const CoefficientField& f) { return from_int(0, f); }
  static Zp one(const CoefficientField& f) { return from_int(1, f); }

  std::uint32_t residue() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Zp inverse() const {
    if (v_ == 0) fail(Errc::DivisionByZero, "inverse of zero in F_" + std::to_string(p_));
    return Zp(static_cast<std::uint32_t>(detail::powmod(v_, p_ - 2, p_)), p_);
  }

  /// n * this, with n an integer (formal derivative coefficients).
  Zp times(std::uint64_t n) const {
    return Zp(static_cast<std::uint32_t>(detail::mulmod(n % p_, v_, p_)), p_);
  }

  friend Zp operator+(Zp a, Zp b) {
    check(a, b);
    std::uint32_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Zp(s, a.p_);
  }
  friend Zp operator-(Zp a, Zp b) {
    check(a, b);
    return Zp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Zp operator*(Zp a, Zp b) {
    check(a, b);
    return Zp(static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend Zp operator/(Zp a, Zp b) {
    check(a, b);
    return a * b.inverse();
  }
  Zp operator-() const { return Zp(v_ == 0 ? 0 : p_ - v_, p_); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }

  friend bool operator==(Zp a, Zp b) {
    check(a, b);
    return a.v_ == b.v_;
  }

  std::string to_string() const { return std::to_string(v_); }

 private:
  Zp(std::uint32_t v, std::uint32_t p) : v_(v), p_(p) {}

  static void check(Zp a, Zp b) {
    if (a.p_ != b.p_)
      fail(Errc::FieldMismatch, "mixing F_" + std::to_string(a.p_) + " and F_" + std::to_string(b.p_));
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

/// Arbitrary-precision rational, always canonical.
class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational from_int(std::int64_t v, const CoefficientField& field) {
    if (!field.is_rational()) fail(Errc::FieldMismatch, "Rational requires characteristic 0");
    return Rational(mpq_class(mpz_class(static_cast<long>(v))));
  }
  static Rational from_mpz(const mpz_class& v, const CoefficientField& field) {
    if (!field.is_rational()) fail(Errc::FieldMismatch, "Rational requires characteristic 0");
    return Rational(mpq_class(v));
  }
  static Rational from_fraction(const mpz_class& num, const mpz_class& den) {
    if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
    return Rational(mpq_class(num, den));
  }
  static Rational zero(const CoefficientField& f) { return from_int(0, f); }
  static Rational one(const CoefficientField& f) { return from_int(1, f); }

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  Rational inverse() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero in Q");
    return Rational(mpq_class(1) / q_);
  }
  Rational times(std::uint64_t n) const {
    return Rational(q_ * mpq_class(mpz_class(static_cast<unsigned long>(n))));
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero in Q");
    return Rational(a.q_ / b.q_);
  }
  Rational operator-() const { return Rational(-q_); }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

  std::string to_string() const { return q_.get_str(); }

 private:
  mpq_class q_ = 0;
};

/// The operations every coefficient type provides.
template <class K>
concept Coefficient = requires(const K a, const K b, const CoefficientField f, std::uint64_t n) {
  { K::from_int(std::int64_t{1}, f) } -> std::same_as<K>;
  { K::from_mpz(mpz_class(1), f) } -> std::same_as<K>;
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { a.times(n) } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == b } -> std::same_as<bool>;
  { a.to_string() } -> std::same_as<std::string>;
};

static_assert(Coefficient<Zp>);
static_assert(Coefficient<Rational>);

/// Dense univariate polynomial, coefficient i belongs to t^i. No trailing zeros.
template <Coefficient K>
class UPoly {
 public:
  explicit UPoly(CoefficientField field) : field_(field) {}
  UPoly(CoefficientField field, std::vector<K> coeffs) : field_(field), c_(std::move(coeffs)) {
    trim();
  }

  /// Convenience constructor from small integers, lowest degree first.
  static UPoly from_ints(CoefficientField field, std::initializer_list<std::int64_t> cs) {
    std::vector<K> v;
    for (auto c : cs) v.push_back(K::from_int(c, field));
    return UPoly(field, std::move(v));
  }

  const CoefficientField& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<K>& coefficients() const { return c_; }
  const K& leading() const { return c_.back(); }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K::from_int(0, field_); }

  UPoly monic() const {
    if (is_zero()) return *this;
    K inv = leading().inverse();
    std::vector<K> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c * inv);
    return UPoly(field_, std::move(v));
  }

  /// Removes the largest power of t dividing this polynomial.
  UPoly strip_t_powers() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return UPoly(field_, std::vector<K>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  /// Division with remainder; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) fail(Errc::DivisionByZero, "univariate division by zero");
    check(d);
    std::vector<K> r = c_;
    const int dd = d.degree();
    std::vector<K> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0,
                     K::from_int(0, field_));
    const K inv = d.leading().inverse();
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
      if (r[i].is_zero()) continue;
      K f = r[i] * inv;
      q[i - dd] = f;
      for (int j = 0; j <= dd; ++j) r[i - dd + j] = r[i - dd + j] - f * d.c_[j];
    }
    return {UPoly(field_, std::move(q)), UPoly(field_, std::move(r))};
  }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, K::from_int(0, a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return UPoly(a.field_, std::move(v));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += c_[i].to_string();
      if (i > 0) s += "*t^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  void check(const UPoly& o) const {
    if (!(field_ == o.field_)) fail(Errc::FieldMismatch, "univariate polynomials over different fields");
  }

  CoefficientField field_;
  std::vector<K> c_;
};

/// Monic gcd by the Euclidean algorithm; gcd(a, 0) = monic(a).
template <Coefficient K>
UPoly<K> univariate_gcd(UPoly<K> a, UPoly<K> b) {
  if (a.is_zero() && b.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace singchar
