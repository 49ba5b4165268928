#pragma once

#include <string>
#include <vector>

#include "singchar/singchar.hpp"

namespace th {

using namespace singchar;

inline RingPtr ring(std::uint64_t ch, std::vector<std::string> vars = {"x", "y"}) {
  return make_ring(CoefficientField(ch), std::move(vars));
}

inline Poly<Rational> q(const std::string& s, std::vector<std::string> vars = {"x", "y"}) {
  return parse<Rational>(s, ring(0, std::move(vars)));
}

inline Poly<Zp> fp(std::uint64_t p, const std::string& s, std::vector<std::string> vars = {"x", "y"}) {
  return parse<Zp>(s, ring(p, std::move(vars)));
}

template <Coefficient K>
std::string str(const Poly<K>& f) {
  return format(f);
}

}  // namespace th
