#pragma once

// Sequences of chains whose K^2 values accumulate: the left blow-up family
// of an ample seed, iterated formation, and the [2 x k, 4+k, n0, 4] family.

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hjq/core.hpp"
#include "hjq/formation.hpp"
#include "hjq/geometry.hpp"

namespace hjq {

struct Example210Family {
  long long n0;
};
struct BlowupFamily {
  Chain seed;
};
struct FormationFamily {
  Fraction seed;
};

using FamilyDescriptor = std::variant<Example210Family, BlowupFamily, FormationFamily>;

// Ampleness evidence recorded for each blow-up step.
struct StepWitness {
  Rational bridge;                  // bridge degree before the step
  bool discrepancies_drop = false;  // a_j > a'_j at every old index
};

struct AccumTerm {
  long long k = 0;
  Chain chain;
  Fraction fraction{2, 1};
  Rational kw2;
  Integer m;
  std::optional<StepWitness> witness;
};

struct AccumSequence {
  FamilyDescriptor family;
  Integer ks2;
  Integer m0;  // m(k) = m0 + k
  std::vector<AccumTerm> terms;

  std::string family_name() const {
    struct {
      std::string operator()(const Example210Family& f) const { return "example210 n0=" + std::to_string(f.n0); }
      std::string operator()(const BlowupFamily& f) const { return "blowup seed=" + f.seed.str(); }
      std::string operator()(const FormationFamily& f) const { return "formation seed=" + f.seed.str(); }
    } v;
    return std::visit(v, family);
  }

  // K^2 recomputed from the chain, ks2 and m(k).
  Rational ledger_kw2(const AccumTerm& t) const { return k2_ledger(t.chain, ks2, m0 + t.k).kw2; }
};

namespace detail {

inline AccumTerm make_term(long long k, Chain chain, const Integer& ks2, const Integer& m) {
  AccumTerm t;
  t.k = k;
  t.fraction = chain_fraction(chain);
  t.kw2 = k2_ledger(chain, ks2, m).kw2;
  t.m = m;
  t.chain = std::move(chain);
  return t;
}

inline Chain left_blowup(const Chain& c) {
  std::vector<Chain::value_type> v(c.begin(), c.end());
  v.front() += 1;
  v.push_back(2);
  return Chain(std::move(v));
}

}  // namespace detail

// Term k: [b_1 + k, b_2, ..., b_r, 2 x k]; each step moves K^2 by k2_step_value.
inline AccumSequence blowup_family(const Chain& seed, long long kmax, const Integer& ks2 = 0, const Integer& m0 = 0) {
  require_strict(seed, "blowup_family");
  if (seed.empty()) throw Error(ErrorKind::InvalidChain, "blowup_family needs a nonempty seed");
  if (kmax < 0) throw Error(ErrorKind::InvalidArgument, "kmax must be >= 0");
  const Rational gate = bridge_degree(chain_fraction(seed));
  if (gate <= 0)
    throw Error(ErrorKind::NotAmple, "bridge degree of " + seed.str() + " is " + to_string(gate) + ", need > 0");
  AccumSequence seq{BlowupFamily{seed}, ks2, m0, {}};
  seq.terms.push_back(detail::make_term(0, seed, ks2, m0));
  for (long long k = 1; k <= kmax; ++k) {
    const AccumTerm& prev = seq.terms.back();
    AccumTerm next = detail::make_term(k, detail::left_blowup(prev.chain), ks2, m0 + k);
    StepWitness w;
    w.bridge = bridge_degree(prev.fraction);
    const auto before = discrepancies(prev.chain).a;
    const auto after = discrepancies(next.chain).a;
    w.discrepancies_drop = true;
    for (std::size_t j = 0; j < before.size(); ++j)
      if (!(before[j] > after[j])) w.discrepancies_drop = false;
    next.witness = std::move(w);
    seq.terms.push_back(std::move(next));
  }
  return seq;
}

// Same chains as blowup_family, produced by iterating formation_rule on n/q.
inline AccumSequence formation_family(const Fraction& seed, long long kmax, const Integer& ks2 = 0,
                                      const Integer& m0 = 0) {
  if (kmax < 0) throw Error(ErrorKind::InvalidArgument, "kmax must be >= 0");
  AccumSequence seq{FormationFamily{seed}, ks2, m0, {}};
  Fraction f = seed;
  for (long long k = 0; k <= kmax; ++k) {
    if (k > 0) f = formation_rule(f).fraction();
    seq.terms.push_back(detail::make_term(k, expand_fraction(f), ks2, m0 + k));
  }
  return seq;
}

inline Chain example210_chain(long long n0, long long k) {
  std::vector<Chain::value_type> v(static_cast<std::size_t>(k), 2);
  v.push_back(4 + k);
  v.push_back(n0);
  v.push_back(4);
  return Chain(std::move(v));
}

// K_S^2 = 0 and m(k) = k + 3, or k + 1 with `naive_m`.
inline AccumSequence example210_family(long long n0, long long kmax, bool naive_m = false) {
  if (n0 < 3) throw Error(ErrorKind::InvalidArgument, "n0 must be >= 3");
  if (kmax < 0) throw Error(ErrorKind::InvalidArgument, "kmax must be >= 0");
  const Integer m0 = naive_m ? 1 : 3;
  AccumSequence seq{Example210Family{n0}, 0, m0, {}};
  seq.terms.reserve(static_cast<std::size_t>(kmax) + 1);
  for (long long k = 0; k <= kmax; ++k) seq.terms.push_back(detail::make_term(k, example210_chain(n0, k), 0, m0 + k));
  return seq;
}

// (4 n0^2 - 8 n0 + 2) / (4 n0 - 1)
inline Rational example210_limit(long long n0) { return Rational(4 * n0 * n0 - 8 * n0 + 2, 4 * n0 - 1); }

// (5 n0 - 1) / (4 n0 - 1), the limit of (2 + q + q') / n
inline Rational example210_end_limit(long long n0) { return Rational(5 * n0 - 1, 4 * n0 - 1); }

enum class Monotonicity { StrictlyIncreasing, StrictlyDecreasing, Constant, Mixed };

inline std::string_view monotonicity_name(Monotonicity m) {
  switch (m) {
    case Monotonicity::StrictlyIncreasing: return "strictly increasing";
    case Monotonicity::StrictlyDecreasing: return "strictly decreasing";
    case Monotonicity::Constant: return "constant";
    case Monotonicity::Mixed: return "not monotone";
  }
  return "?";
}

struct LimitReport {
  Monotonicity monotonicity = Monotonicity::Mixed;
  Rational last;
  std::vector<Rational> differences;  // K^2_k - K^2_{k-1}
  Rational tol;
  bool converged = false;
  std::optional<Rational> target;
  std::optional<Rational> gap;  // target - last
};

inline LimitReport limit_of(const AccumSequence& seq, const Rational& tol) {
  if (seq.terms.size() < 2) throw Error(ErrorKind::TooFewTerms, "need at least 2 terms");
  LimitReport rep;
  rep.tol = tol;
  rep.last = seq.terms.back().kw2;
  bool up = true, down = true, flat = true;
  for (std::size_t i = 1; i < seq.terms.size(); ++i) {
    Rational d = seq.terms[i].kw2 - seq.terms[i - 1].kw2;
    if (d <= 0) up = false;
    if (d >= 0) down = false;
    if (d != 0) flat = false;
    rep.differences.push_back(std::move(d));
  }
  rep.monotonicity = flat ? Monotonicity::Constant
                     : up ? Monotonicity::StrictlyIncreasing
                     : down ? Monotonicity::StrictlyDecreasing
                            : Monotonicity::Mixed;
  const std::size_t window = std::min<std::size_t>(3, rep.differences.size());
  rep.converged = true;
  for (std::size_t i = rep.differences.size() - window; i < rep.differences.size(); ++i)
    if (!(abs(rep.differences[i]) < tol)) rep.converged = false;
  if (const auto* f = std::get_if<Example210Family>(&seq.family)) {
    // The closed form assumes m0 = 3; each unit less raises K^2 by one.
    rep.target = example210_limit(f->n0) + Rational(3 - seq.m0);
    rep.gap = *rep.target - rep.last;
  }
  return rep;
}

struct StarRecord {
  Integer ks2;
  bool has_bridge = false;
  std::size_t u = 0;
  Chain reduced_chain;
};

// Finite surrogate: constant ks2 and u, bridges everywhere, distinct chains.
inline bool property_star(const std::vector<StarRecord>& records) {
  if (records.empty()) throw Error(ErrorKind::InvalidArgument, "property_star needs at least one record");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.ks2 != records.front().ks2 || r.u != records.front().u || !r.has_bridge) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (records[j].reduced_chain == r.reduced_chain) return false;
  }
  return true;
}

}  // namespace hjq
