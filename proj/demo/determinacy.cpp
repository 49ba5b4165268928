// Determinacy bounds for y^8 + x^8 y^4 + x^23 over F_23.

#include <iostream>

#include "singchar/singchar.hpp"

using namespace singchar;

int main() {
  const RingPtr ring = make_ring(CoefficientField(23), {"x", "y"});
  const auto f = parse<Zp>("y8+x8y4+x23", ring);

  std::cout << "f = " << format(f) << " over " << f.field().name() << "\n";
  std::cout << "mu = " << milnor_number(f) << ", tau = " << tjurina_number(f) << "\n";
  for (auto kind : {EquivalenceKind::Right, EquivalenceKind::Contact}) {
    const DeterminacyReport r = determinacy_bound(f, kind);
    std::cout << to_string(kind) << ": k* = " << r.k_star << ", bound = " << r.theorem_bound;
    if (r.highcorner) std::cout << ", highcorner = " << format_monomial(*r.highcorner, ring->variables());
    std::cout << "\n";
  }
}
