#pragma once

// Polynomial text format.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := (coeff | var pow? | '(' expr ')') ('^' nat)?
//   pow    := '^' nat | nat            (bare digits only in compact form)
//   coeff  := integer | integer '/' integer   (fractions only in characteristic 0)
//
// Compact form ("y8+x8y4+x23") requires single-letter variable names.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>

#include "singchar/poly.hpp"

namespace singchar {

namespace detail {

template <Coefficient K>
class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring)
      : s_(text), ring_(std::move(ring)), compact_(ring_->compact_names()) {}

  Poly<K> parse() {
    skip_ws();
    if (pos_ == s_.size()) error("empty input");
    Poly<K> p = expr();
    skip_ws();
    if (pos_ != s_.size()) error(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_' || c == '(';
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  std::uint32_t exponent() {
    mpz_class e = integer();
    if (e > UINT32_MAX) error("exponent too large");
    return static_cast<std::uint32_t>(e.get_ui());
  }

  Poly<K> expr() {
    Poly<K> acc = Poly<K>::zero(ring_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Poly<K> t = term();
    acc = negate ? acc - t : acc + t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly<K> term() {
    Poly<K> acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly<K> factor() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    Poly<K> base(ring_);
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!peek(')')) error("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = coefficient();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      base = variable();
    } else {
      error(std::string("unexpected '") + c + "'");
    }
    if (peek('^')) {
      ++pos_;
      base = base.pow(exponent());
    }
    return base;
  }

  Poly<K> coefficient() {
    mpz_class num = integer();
    if (peek('/')) {
      if (!ring_->field().is_rational()) error("fractions are only allowed in characteristic 0");
      ++pos_;
      mpz_class den = integer();
      if (den == 0) fail(Errc::DivisionByZero, "zero denominator at position " + std::to_string(pos_));
      if constexpr (std::is_same_v<K, Rational>) {
        return Poly<K>::constant(ring_, Rational::from_fraction(num, den));
      } else {
        error("fractions are only allowed in characteristic 0");
      }
    }
    return Poly<K>::constant(ring_, K::from_mpz(num, ring_->field()));
  }

  Poly<K> variable() {
    const std::size_t start = pos_;
    std::string name;
    if (compact_) {
      name = std::string(1, s_[pos_++]);
    } else {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      name = std::string(s_.substr(start, pos_ - start));
    }
    const auto& vars = ring_->variables();
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
      fail(Errc::UnknownVariable, "unknown variable '" + name + "' at position " + std::to_string(start));
    const std::size_t idx = static_cast<std::size_t>(it - vars.begin());
    std::uint32_t e = 1;
    // Compact form: digits glued to the letter are the exponent.
    if (compact_ && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) e = exponent();
    return Poly<K>::monomial(ring_, Monomial::variable(ring_->nvars(), idx, e));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  bool compact_;
};

}  // namespace detail

/// Parses text into a polynomial of the given ring. Throws SyntaxError or UnknownVariable.
template <Coefficient K>
Poly<K> parse(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser<K>(text, ring).parse();
}

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

/// Explicit-form rendering ("x^2*y + 3*x^4"); parse(format(f)) == f.
template <Coefficient K>
std::string format(const Poly<K>& f) {
  if (f.is_zero()) return "0";
  auto terms = f.terms();
  std::sort(terms.begin(), terms.end(),
            [](const Term<K>& a, const Term<K>& b) { return DisplayOrder{}(a.mono, b.mono); });
  const auto& vars = f.ring()->variables();
  std::string out;
  for (const auto& t : terms) {
    std::string c = t.coeff.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += format_monomial(t.mono, vars);
    }
  }
  return out;
}

}  // namespace singchar
