// Expansion, duals, contraction and discrepancies on a few fractions.

#include <iostream>

#include "hjq/hjq.hpp"

int main() {
  using namespace hjq;
  for (const Fraction& f : {Fraction(19, 7), Fraction(18, 11), Fraction(40, 11)}) {
    const Chain b = expand_fraction(f);
    std::cout << f << " = " << b << "  dual " << dual_fraction(f) << "  q' = " << f.inverse() << "\n";
    std::cout << "  discrepancies:";
    for (const auto& a : discrepancies(b).a) std::cout << " " << to_string(a);
    std::cout << "\n";
  }
  const Chain c{2, 5, 1, 2, 5};
  const auto r = contract_fully(c);
  std::cout << r.trace.to_log();
  std::cout << c << " contracts to " << r.chain << "\n";
}
