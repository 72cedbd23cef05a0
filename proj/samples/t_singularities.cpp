// T-singularities of small length: recognition, decomposition and minimal cores.

#include <iostream>

#include "hjq/hjq.hpp"

int main() {
  using namespace hjq;
  for (const Chain& c : enumerate_generalized_T(Chain{4}, 3)) {
    const Fraction f = chain_fraction(c);
    const auto t = recognize_T(f);
    std::cout << c << "  " << f << "  " << decompose(c)->str();
    if (t) std::cout << "  d=" << t->d << " n0=" << t->n0 << " a=" << t->a;
    std::cout << "\n";
  }
  std::cout << "cores of weight <= 3:\n";
  for (const auto& e : enumerate_cores(3)) std::cout << "  " << e.core.str() << (e.minimal ? " minimal" : "") << "\n";
}
