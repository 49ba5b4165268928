#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace singchar {

/// A natural number or infinity. Arithmetic saturates at infinity.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t v) : value_(v), infinite_(false) {}  // NOLINT

  static constexpr ExtNat infinity() {
    ExtNat r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtNat(a.value_ + b.value_);
  }
  friend constexpr ExtNat operator*(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_) {
      if ((a.is_finite() && a.value_ == 0) || (b.is_finite() && b.value_ == 0))
        return ExtNat(0);
      return infinity();
    }
    return ExtNat(a.value_ * b.value_);
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return infinite_ ? std::string("infinity") : std::to_string(value_);
  }

  friend std::ostream& operator<<(std::ostream& os, ExtNat v) {
    return os << v.to_string();
  }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

/// A signed integer or +infinity; used for bounds like 2k - ord + 2.
class ExtInt {
 public:
  ExtInt() = default;
  ExtInt(std::int64_t v) : value_(v) {}  // NOLINT
  static ExtInt infinity() {
    ExtInt r;
    r.infinite_ = true;
    return r;
  }
  static ExtInt from(ExtNat n) {
    return n.is_infinite() ? infinity() : ExtInt(static_cast<std::int64_t>(n.value()));
  }

  bool is_infinite() const { return infinite_; }
  std::int64_t value() const { return value_; }

  friend ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtInt(a.value_ + b.value_);
  }
  friend ExtInt operator-(ExtInt a, std::int64_t b) {
    if (a.infinite_) return a;
    return ExtInt(a.value_ - b);
  }
  friend ExtInt operator*(std::int64_t k, ExtInt a) {
    if (a.infinite_) return k == 0 ? ExtInt(0) : infinity();
    return ExtInt(k * a.value_);
  }
  friend bool operator==(ExtInt a, ExtInt b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return infinite_ ? std::string("infinity") : std::to_string(value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtInt& v) {
    return os << v.to_string();
  }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

/// Exact rational or +infinity. Used for delta_N and volumes.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(mpq_class v) : value_(std::move(v)) { value_->canonicalize(); }  // NOLINT
  static ExtRational infinity() { return ExtRational(std::nullopt); }

  bool is_infinite() const { return !value_.has_value(); }
  const mpq_class& value() const { return *value_; }
  bool is_integer() const { return value_ && value_->get_den() == 1; }

  /// "infinity", "n" or "a/b".
  std::string to_string() const {
    if (!value_) return "infinity";
    return value_->get_str();
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtRational& v) {
    return os << v.to_string();
  }

 private:
  explicit ExtRational(std::nullopt_t) : value_(std::nullopt) {}
  std::optional<mpq_class> value_ = mpq_class(0);
};

/// Converts an integral rational (or infinity) to ExtInt.
inline ExtInt to_ext_int(const ExtRational& q) {
  if (q.is_infinite()) return ExtInt::infinity();
  return ExtInt(q.value().get_num().get_si());
}

}  // namespace singchar
