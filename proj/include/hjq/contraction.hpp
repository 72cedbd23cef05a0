#pragma once

// Blow-down simulation on chains: contraction of entries equal to 1,
// insertion patterns, admissibility and admissibility for chains.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hjq/core.hpp"
#include "hjq/tstep.hpp"

namespace hjq {

struct ContractionStep {
  std::size_t index;
  Chain before;
  Chain after;
};

struct ContractionTrace {
  std::vector<ContractionStep> steps;

  // One line per step: "step k: contract index i: [before] -> [after]".
  std::string to_log() const {
    std::string out;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const auto& s = steps[k];
      out += "step " + std::to_string(k + 1) + ": contract index " + std::to_string(s.index) + ": " +
             s.before.str() + " -> " + s.after.str() + "\n";
    }
    return out;
  }
};

// {b_1..b_r, 1, b_1..b_r, 1, ..., 1, b_1..b_r} with u ones.
struct InsertionPattern {
  Chain base;
  std::size_t u = 0;
};

inline bool is_terminal_zero(const Chain& c) { return c.size() == 1 && c[0] == 0; }

namespace detail {

// Contracts position i in place; `origin` (if given) is kept parallel.
inline void contract_in_place(std::vector<Chain::value_type>& v, std::size_t i,
                              std::vector<std::size_t>* origin = nullptr) {
  if (i >= v.size() || v[i] != 1)
    throw Error(ErrorKind::NotAContractibleEntry,
                "index " + std::to_string(i) + " of " + Chain(v).str() + " is not equal to 1");
  if (i > 0) v[i - 1] -= 1;
  if (i + 1 < v.size()) v[i + 1] -= 1;
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  if (origin) origin->erase(origin->begin() + static_cast<std::ptrdiff_t>(i));
  const bool bad = v.size() >= 2 ? std::any_of(v.begin(), v.end(), [](auto b) { return b <= 0; })
                                 : (v.size() == 1 && v[0] < 0);
  if (bad) throw Error(ErrorKind::NegativeWeight, "blow-down produced " + Chain(v).str());
}

}  // namespace detail

inline Chain contract_once(const Chain& c, std::size_t i) {
  require_general(c, "contract_once");
  auto v = c.entries();
  detail::contract_in_place(v, i);
  return Chain(std::move(v));
}

struct ContractionResult {
  Chain chain;  // strict, the singleton [0], or empty
  ContractionTrace trace;
};

// Contracts until no entry equals 1; `pick(chain, ones)` chooses which of
// the current positions holding 1 goes next.
template <class Picker>
ContractionResult contract_fully_by(const Chain& c, Picker&& pick) {
  if (is_terminal_zero(c)) return {c, {}};
  require_general(c, "contract_fully");
  ContractionResult out{c, {}};
  auto v = c.entries();
  std::vector<std::size_t> ones;
  while (true) {
    ones.clear();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == 1) ones.push_back(i);
    if (ones.empty()) break;
    const std::size_t i = pick(std::as_const(v), std::as_const(ones));
    Chain before(v);
    detail::contract_in_place(v, i);
    out.trace.steps.push_back({i, std::move(before), Chain(v)});
    if (v.size() == 1 && v[0] == 0) break;
  }
  out.chain = Chain(std::move(v));
  return out;
}

// Leftmost entry equal to 1 first.
inline ContractionResult contract_fully(const Chain& c) {
  return contract_fully_by(c, [](const auto&, const auto& ones) { return ones.front(); });
}

inline Chain concat_with_ones(const InsertionPattern& p) {
  require_strict(p.base, "concat_with_ones");
  std::vector<Chain::value_type> v;
  v.reserve((p.u + 1) * p.base.size() + p.u);
  for (std::size_t copy = 0; copy <= p.u; ++copy) {
    if (copy) v.push_back(1);
    v.insert(v.end(), p.base.begin(), p.base.end());
  }
  return Chain(std::move(v));
}

inline Chain concat_with_ones(const Chain& base, std::size_t u) { return concat_with_ones(InsertionPattern{base, u}); }

// p_i > 0 for i = 0..s-1 under the minus-sign convergent recursion.
inline bool is_admissible(const Chain& c) {
  require_general(c, "is_admissible");
  return convergents_admissible(convergents(c));
}

// Decided by undoing T-steps: true iff the undo path ends at a core.
inline bool is_admissible_for_chains(const Chain& c) {
  require_strict(c, "is_admissible_for_chains");
  Chain cur = c;
  while (!is_core(cur)) {
    if (cur.size() < 2) return false;
    auto undo = undo_tstep(cur);
    if (!undo.undone()) return false;
    cur = std::move(*undo.predecessor);
  }
  return true;
}

// Straight from the definition: every insertion count u = 0..u_check.
inline bool is_admissible_for_chains_direct(const Chain& c, std::size_t u_check = 5) {
  require_strict(c, "is_admissible_for_chains_direct");
  for (std::size_t u = 0; u <= u_check; ++u)
    if (!is_admissible(concat_with_ones(c, u))) return false;
  return true;
}

// Positions of the middle copy of c-1-c-1-c that survive full contraction.
struct SurvivingCenter {
  std::size_t first = 0;               // smallest surviving position (0-based, within the copy)
  std::size_t last = 0;                // largest surviving position
  std::vector<std::size_t> survivors;  // all surviving positions, ascending
  Chain contracted;                    // the fully contracted triple
};

inline SurvivingCenter surviving_center(const Chain& c) {
  require_strict(c, "surviving_center");
  if (c.empty()) throw Error(ErrorKind::InvalidChain, "surviving_center needs a nonempty chain");
  auto v = concat_with_ones(c, 2).entries();
  std::vector<std::size_t> origin(v.size());
  std::iota(origin.begin(), origin.end(), std::size_t{0});
  try {
    while (true) {
      auto it = std::find(v.begin(), v.end(), Chain::value_type{1});
      if (it == v.end()) break;
      detail::contract_in_place(v, static_cast<std::size_t>(it - v.begin()), &origin);
      if (v.size() == 1 && v[0] == 0) break;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NegativeWeight) throw;
    throw Error(ErrorKind::NotAdmissibleForChains, c.str() + ": " + e.what());
  }
  SurvivingCenter out;
  const std::size_t lo = c.size() + 1, hi = 2 * c.size() + 1;
  if (!(v.size() == 1 && v[0] == 0))
    for (auto o : origin)
      if (o >= lo && o < hi) out.survivors.push_back(o - lo);
  if (out.survivors.empty())
    throw Error(ErrorKind::NotAdmissibleForChains, "no entry of the middle copy of " + c.str() + " survives");
  out.first = out.survivors.front();
  out.last = out.survivors.back();
  out.contracted = Chain(std::move(v));
  return out;
}

}  // namespace hjq
