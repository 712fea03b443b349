// Minimal tour: parse a polynomial, evaluate it, compute its bend locus as
// an exact region, and translate a congruence into ideal generators.

#include <iostream>

#include "tropdual/tropdual.hpp"

int main() {
  using namespace tropdual;

  DualPolynomial f = parse_polynomial("(3+1e)*x^2 + (1+1e)*x + 2e");
  std::cout << "f = " << poly_to_string(f) << "\n";

  for (long v : {-1, 0, 1, 2}) {
    std::vector<TropValue> a{TropValue(Rat(v))};
    std::cout << "  f(" << v << ") = " << dual_to_string(poly_eval(f, a))
              << (in_bend_locus(f, a) ? "   <- bends" : "") << "\n";
  }

  Region r = bend_region(f);
  std::cout << "bend locus as JSON:\n" << region_to_json(r).dump(2) << "\n";

  CongruencePair rel(parse_polynomial("x^2 + x + 1"), parse_polynomial("x"));
  std::cout << "generators for " << poly_to_string(rel.lhs) << " ~ " << poly_to_string(rel.rhs)
            << ":\n";
  for (const DualPolynomial& g : congruence_to_ideal({rel}))
    std::cout << "  " << poly_to_string_named(g, g.vars() - 1) << "\n";
  return 0;
}
