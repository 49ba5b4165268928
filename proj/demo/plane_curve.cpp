// Newton invariants, blowups and Milnor's formula for a few plane curves.

#include <iostream>

#include "singchar/singchar.hpp"

using namespace singchar;

template <Coefficient K>
void show(const Poly<K>& f) {
  const CurveReport<K> c = milnor_formula_check(f);
  std::cout << format(f) << " over " << f.field().name() << "\n"
            << "  mu = " << c.mu << ", mu_N = " << c.mu_n << "\n"
            << "  delta_N = " << c.delta.value << " (" << to_string(c.delta.status) << ")"
            << ", r_N = " << c.r.value << " (" << to_string(c.r.status) << ")"
            << ", nu = " << c.blowup.nu << "\n"
            << "  NND = " << c.nnd << ", WNND = " << c.wnnd << ", verdict " << to_string(c.verdict) << "\n";
}

int main() {
  std::cout << std::boolalpha;
  const RingPtr q = make_ring(CoefficientField(0), {"x", "y"});
  show(parse<Rational>("x4y+x2y2+y5", q));

  const RingPtr f2 = make_ring(CoefficientField(2), {"x", "y"});
  show(parse<Zp>("x6+y3+x5y", f2));
  show(parse<Zp>("(x-y)^2+x^5", f2));
}
