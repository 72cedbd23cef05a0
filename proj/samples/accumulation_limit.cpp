// K^2 along [2 x k, 4+k, n0, 4] and the blow-up family of [5].

#include <iostream>

#include "hjq/hjq.hpp"

int main() {
  using namespace hjq;
  const auto seq = example210_family(3, 200);
  const auto rep = limit_of(seq, Rational(1, 1000000));
  std::cout << "n0=3 k=200 K^2=" << to_decimal(rep.last, 9) << " limit " << to_string(example210_limit(3)) << " gap "
            << to_decimal(*rep.gap, 9) << " (" << monotonicity_name(rep.monotonicity) << ")\n";
  for (const auto& t : blowup_family(Chain{5}, 4).terms)
    std::cout << "k=" << t.k << " " << t.chain << " K^2=" << to_string(t.kw2) << "\n";
}
