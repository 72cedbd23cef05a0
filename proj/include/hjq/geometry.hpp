#pragma once

// Discrepancies of a chain, the K^2 bookkeeping around a cyclic quotient
// singularity, the delta table and the bound checkers.

#include <optional>
#include <string>
#include <vector>

#include "hjq/core.hpp"
#include "hjq/formation.hpp"

namespace hjq {

// a_j together with the forward sweep coefficients c_j, d_j.
struct Discrepancies {
  std::vector<Rational> a;
  std::vector<Rational> c;
  std::vector<Rational> d;
};

// Solves  a_{j-1} - b_j a_j + a_{j+1} = b_j - 2  (a_0 = a_{r+1} = 0).
inline Discrepancies discrepancies(const Chain& chain) {
  require_strict(chain, "discrepancies");
  if (chain.empty()) throw Error(ErrorKind::InvalidChain, "discrepancies need a nonempty chain");
  const std::size_t r = chain.size();
  Discrepancies out;
  out.c.resize(r);
  out.d.resize(r);
  out.a.resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    const Rational b(chain[j]);
    const Rational denom = j == 0 ? Rational(-b) : Rational(-b - out.c[j - 1]);
    const Rational rhs = b - 2;
    out.c[j] = 1 / denom;
    out.d[j] = j == 0 ? Rational(rhs / denom) : Rational((rhs - out.d[j - 1]) / denom);
  }
  out.a[r - 1] = out.d[r - 1];
  for (std::size_t j = r - 1; j-- > 0;) out.a[j] = out.d[j] - out.c[j] * out.a[j + 1];
  return out;
}

// (2 + q + q') / n
inline Rational end_term(const Fraction& f) { return Rational(2 + f.q() + f.inverse(), f.n()); }

// (2(n - 1) - q - q') / n
inline Rational correction_term(const Fraction& f) { return 2 - end_term(f); }

struct VolumeLedger {
  Rational kw2;
  Integer ks2;
  Rational kx2;
  Integer m;
  std::optional<Rational> lambda;
  Rational correction;
  std::optional<Integer> chi;
};

inline VolumeLedger k2_ledger(const Chain& chain, const Integer& ks2, const Integer& m,
                              std::optional<Rational> lambda = std::nullopt, std::optional<Integer> chi = std::nullopt) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "m must be >= 0");
  const Rational corr = correction_term(chain_fraction(chain));
  VolumeLedger out;
  out.ks2 = ks2;
  out.m = m;
  out.correction = corr;
  out.kw2 = Rational(ks2 + chain.excess() - m) - corr;
  out.kx2 = Rational(ks2 - m);
  out.lambda = std::move(lambda);
  out.chi = std::move(chi);
  return out;
}

// A caller-supplied K_W^2 must agree with the one forced by (ks2, m).
inline void require_consistent(const VolumeLedger& ledger, const Rational& claimed_kw2) {
  if (ledger.kw2 != claimed_kw2)
    throw Error(ErrorKind::InconsistentLedger,
                "K_W^2 = " + to_string(claimed_kw2) + " but K_S^2, m and the chain give " + to_string(ledger.kw2));
}

enum class DeltaLabel { A, B1, B2, C1, C2, D1, D2, D3 };

inline std::string_view label_name(DeltaLabel l) {
  switch (l) {
    case DeltaLabel::A: return "A";
    case DeltaLabel::B1: return "B1";
    case DeltaLabel::B2: return "B2";
    case DeltaLabel::C1: return "C1";
    case DeltaLabel::C2: return "C2";
    case DeltaLabel::D1: return "D1";
    case DeltaLabel::D2: return "D2";
    case DeltaLabel::D3: return "D3";
  }
  return "?";
}

inline DeltaLabel parse_delta_label(std::string_view s) {
  for (auto l : {DeltaLabel::A, DeltaLabel::B1, DeltaLabel::B2, DeltaLabel::C1, DeltaLabel::C2, DeltaLabel::D1,
                 DeltaLabel::D2, DeltaLabel::D3})
    if (label_name(l) == s) return l;
  throw Error(ErrorKind::Parse, "unknown delta case '" + std::string(s) + "'");
}

struct DeltaCase {
  DeltaLabel label = DeltaLabel::A;
  std::optional<long long> l;
  std::optional<long long> k;
};

inline long long delta_from_case(const DeltaCase& d) {
  auto need = [&](const std::optional<long long>& v, const char* name) {
    if (!v) throw Error(ErrorKind::MissingParameter, std::string("case ") + std::string(label_name(d.label)) + " needs " + name);
    if (*v < 0) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be >= 0");
    return *v;
  };
  switch (d.label) {
    case DeltaLabel::A: return 0;
    case DeltaLabel::B1: return need(d.l, "l");
    case DeltaLabel::B2: return 1;
    case DeltaLabel::C1: return need(d.k, "k") + 1;
    case DeltaLabel::C2:
    case DeltaLabel::D1: {
      const auto k = need(d.k, "k");
      return k + need(d.l, "l");
    }
    case DeltaLabel::D2: return need(d.l, "l") + 1;
    case DeltaLabel::D3: return 2;
  }
  return 0;
}

enum class Verdict { Holds, Fails, NotEvaluated };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotEvaluated: return "not evaluated";
  }
  return "?";
}

// lhs <= rhs, slack = rhs - lhs.
struct BoundCheck {
  std::string inequality;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::optional<Rational> slack;
  Verdict verdict = Verdict::NotEvaluated;
};

inline BoundCheck compare(std::string name, Rational lhs, Rational rhs) {
  BoundCheck out{std::move(name), lhs, rhs, rhs - lhs, Verdict::Holds};
  if (lhs > rhs) out.verdict = Verdict::Fails;
  return out;
}

struct BoundReport {
  BoundCheck excess;    // sum(b_j - 2) bound
  BoundCheck length;    // r bound
  BoundCheck euler;     // r bound through chi; needs chi
  BoundCheck noether;   // chi <= K_W^2 + 3; needs chi

  bool all_evaluated_hold() const {
    for (const auto* b : {&excess, &length, &euler, &noether})
      if (b->verdict == Verdict::Fails) return false;
    return true;
  }
};

inline BoundReport check_main_bounds(const Chain& chain, const VolumeLedger& ledger, long long delta) {
  if (!ledger.lambda) throw Error(ErrorKind::IncompleteLedger, "lambda is required for the bounds");
  require_strict(chain, "check_main_bounds");
  const Fraction f = chain_fraction(chain);
  const Rational& lambda = *ledger.lambda;
  const Rational dl = Rational(delta) - lambda;
  const Rational corr = correction_term(f);
  const Rational r(static_cast<long long>(chain.size()));
  BoundReport rep;
  rep.excess = compare("sum(b_j-2) <= 2(K_W^2-K_S^2) + 2*correction + delta - lambda", Rational(chain.excess()),
                       2 * (ledger.kw2 - Rational(ledger.ks2)) + 2 * corr + dl);
  rep.length = compare("r <= 13K_W^2 - 2K_S^2 + 38 - (2+q+q')/n + delta - lambda", r,
                       13 * ledger.kw2 - 2 * Rational(ledger.ks2) + 38 - end_term(f) + dl);
  rep.euler.inequality = "r <= 12chi - (4/3)K_W^2 - A - (1 - 1/n)";
  rep.noether.inequality = "chi <= K_W^2 + 3";
  if (ledger.chi) {
    const Rational chi(*ledger.chi);
    const Rational A = Rational(-chain.excess()) + corr;
    rep.euler = compare(rep.euler.inequality, r, 12 * chi - Rational(4, 3) * ledger.kw2 - A - (1 - Rational(1, f.n())));
    rep.noether = compare(rep.noether.inequality, chi, ledger.kw2 + 3);
  }
  return rep;
}

// 2 delta <= sum(a_j - 2) - 2
inline BoundCheck check_genT_delta_bound(const Chain& chain, long long delta) {
  require_strict(chain, "check_genT_delta_bound");
  return compare("2*delta <= sum(a_j-2) - 2", Rational(2 * delta), Rational(chain.excess() - 2));
}

// n(n - (2+q+q')) / ((n+q)(2n-q') + 1)
inline Rational bridge_degree(const Fraction& f) {
  const Integer& n = f.n();
  const Integer& q = f.q();
  const Integer qp = f.inverse();
  return Rational(n * (n - (2 + q + qp)), (n + q) * (2 * n - qp) + 1);
}

inline Rational k2_step_value(const Fraction& f) {
  const FormationStep s = formation_rule(f);
  return Rational(2 + s.Q + s.Qp, s.N) - end_term(f);
}

}  // namespace hjq
