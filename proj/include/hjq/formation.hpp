#pragma once

// One step of the formation rule: n/q with chain [b_1..b_s] goes to N/Q with
// chain [b_1 + 1, b_2, ..., b_s, 2], and N/Q' with the reversed chain.

#include "hjq/core.hpp"

namespace hjq {

struct FormationStep {
  Integer N;
  Integer Q;
  Integer Qp;
  Integer m;  // q q' = 1 + m n

  Fraction fraction() const { return Fraction(N, Q); }
  Fraction dual_fraction() const { return Fraction(N, Qp); }

  friend bool operator==(const FormationStep&, const FormationStep&) = default;
};

inline FormationStep formation_rule(const Fraction& f) {
  if (f.n() <= 2) throw Error(ErrorKind::IndexTooSmall, "formation rule needs n > 2, got " + f.str());
  const Integer& n = f.n();
  const Integer& q = f.q();
  const Integer qp = f.inverse();
  const Integer m = (q * qp - 1) / n;
  return {2 * q - m + 2 * n - qp, 2 * q - m, q + n, m};
}

}  // namespace hjq
