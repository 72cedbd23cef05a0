#pragma once

// Generalized T-singularities: reduced insertion forms, decomposition into
// (minimal core, insertion count, T-step word), minimal cores, recognition
// of classical T-singularities 1/(d n^2)(1, d n a - 1) and enumeration.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hjq/contraction.hpp"
#include "hjq/core.hpp"
#include "hjq/tstep.hpp"

namespace hjq {

// Hard cap on the insertion count searched for a given center.
inline constexpr std::size_t kMaxInsertions = 64;

// Fully contracted base-1-base-...-base with u ones.
inline Chain reduced_form(const Chain& base, std::size_t u) {
  require_strict(base, "reduced_form");
  if (base.empty()) throw Error(ErrorKind::InvalidChain, "reduced_form needs a nonempty base");
  const Chain joined = concat_with_ones(base, u);
  if (!is_admissible(joined))
    throw Error(ErrorKind::NotAdmissible, joined.str() + " is not admissible");
  ContractionResult res;
  try {
    res = contract_fully(joined);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NegativeWeight) throw;
    throw Error(ErrorKind::NotAdmissible, joined.str() + ": " + e.what());
  }
  if (res.chain.empty() || !res.chain.is_strict())
    throw Error(ErrorKind::NotAdmissible, joined.str() + " contracts to " + res.chain.str());
  return res.chain;
}

// If c is the reduced form of a core of length r with s/r - 1 insertions,
// returns that core. Copies of [e_1..e_r] get their inner ends decremented
// at every junction; for r = 1 the middle entries are hit twice.
inline std::optional<Chain> insertion_predecessor(const Chain& c, std::size_t r) {
  const std::size_t s = c.size();
  if (r == 0 || s % r != 0 || r >= s) return std::nullopt;
  const std::size_t copies = s / r;
  std::vector<Chain::value_type> e;
  if (r == 1) {
    e.push_back(c.front() + 1);
  } else {
    e.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(r));
    e.back() = c.back();
  }
  Chain core(std::move(e));
  if (!is_core(core)) return std::nullopt;
  for (std::size_t j = 0; j < copies; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      Chain::value_type expect = core[i];
      if (i == 0 && j > 0) expect -= 1;
      if (i == r - 1 && j + 1 < copies) expect -= 1;
      if (c[j * r + i] != expect) return std::nullopt;
    }
  }
  return core;
}

// Minimal: not the reduced form of a shorter core. Length-1 cores are minimal.
inline bool is_minimal_core(const Core& core) {
  const Chain& c = core.chain();
  for (std::size_t r = 1; r < c.size(); ++r)
    if (insertion_predecessor(c, r)) return false;
  return true;
}

inline bool is_minimal_core(const Chain& c) { return is_minimal_core(Core(c)); }

struct Decomposition {
  Core core;
  std::size_t u = 0;
  std::vector<TStep> steps;  // in application order, starting from reduced_form(core, u)

  std::string word() const {
    std::string w;
    for (auto t : steps) w.push_back(letter_of(t));
    return w;
  }

  // "core=[...] u=K steps=LRL..."
  std::string str() const { return "core=" + core.str() + " u=" + std::to_string(u) + " steps=" + word(); }

  Chain base() const { return u == 0 ? core.chain() : reduced_form(core.chain(), u); }

  Chain replay() const {
    Chain c = base();
    for (auto t : steps) c = apply_tstep(c, t);
    return c;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Undoes T-steps down to a core, then splits the core as the reduced form
// of a minimal core with the largest possible insertion count.
inline std::optional<Decomposition> decompose(const Chain& c) {
  require_strict(c, "decompose");
  if (c.empty()) return std::nullopt;
  Chain cur = c;
  std::vector<TStep> undone;
  while (!is_core(cur)) {
    if (cur.size() < 2) return std::nullopt;
    auto undo = undo_tstep(cur);
    if (!undo.undone()) return std::nullopt;
    undone.push_back(*undo.step);
    cur = std::move(*undo.predecessor);
  }
  std::reverse(undone.begin(), undone.end());
  for (std::size_t r = 1; r < cur.size(); ++r) {
    if (auto pred = insertion_predecessor(cur, r))
      return Decomposition{Core(std::move(*pred)), cur.size() / r - 1, std::move(undone)};
  }
  return Decomposition{Core(std::move(cur)), 0, std::move(undone)};
}

// Chains c, undo(c), undo(undo(c)), ... as far as T-steps can be undone.
inline std::vector<Chain> undo_path(const Chain& c) {
  std::vector<Chain> path{c};
  while (path.back().size() >= 2) {
    auto undo = undo_tstep(path.back());
    if (!undo.undone()) break;
    path.push_back(std::move(*undo.predecessor));
  }
  return path;
}

// reduced_form(center, u) for u = 0, 1, ... while the length stays <= max_length.
inline std::vector<Chain> center_seeds(const Chain& center, std::size_t max_length) {
  std::vector<Chain> seeds;
  for (std::size_t u = 0; u <= kMaxInsertions; ++u) {
    Chain rf = reduced_form(center, u);
    if (rf.size() > max_length) break;
    seeds.push_back(std::move(rf));
  }
  return seeds;
}

inline void require_center(const Chain& center) {
  require_strict(center, "center");
  if (center.empty() || !is_admissible_for_chains(center))
    throw Error(ErrorKind::InvalidCenter, center.str() + " is not admissible for chains");
}

// True iff c is obtained from some reduced_form(center, u) by T-steps.
inline bool is_generalized_T(const Chain& c, const Chain& center) {
  require_center(center);
  require_strict(c, "is_generalized_T");
  if (c.empty()) return false;
  const auto seeds = center_seeds(center, c.size());
  for (const auto& step : undo_path(c))
    if (std::find(seeds.begin(), seeds.end(), step) != seeds.end()) return true;
  return false;
}

// n = d n0^2, q = d n0 a - 1, 0 < a < n0, gcd(n0, a) = 1.
struct TRepresentation {
  Integer d;
  Integer n0;
  Integer a;

  friend bool operator==(const TRepresentation&, const TRepresentation&) = default;
};

inline std::optional<TRepresentation> recognize_T(const Fraction& f) {
  // a / n0 is (q + 1) / n in lowest terms, so the representation is unique when it exists.
  const Integer g = gcd(f.q() + 1, f.n());
  const Integer n0 = f.n() / g, a = (f.q() + 1) / g;
  if (n0 < 2 || a >= n0 || f.n() % (n0 * n0) != 0) return std::nullopt;
  return TRepresentation{f.n() / (n0 * n0), n0, a};
}

// Members of the family of center `center` with length <= max_length, lexicographic.
inline std::vector<Chain> enumerate_generalized_T(const Chain& center, std::size_t max_length) {
  require_center(center);
  std::set<Chain> seen;
  std::vector<Chain> frontier;
  for (auto& seed : center_seeds(center, max_length))
    if (seen.insert(seed).second) frontier.push_back(seed);
  while (!frontier.empty()) {
    std::vector<Chain> next;
    for (const auto& c : frontier) {
      if (c.size() + 1 > max_length) continue;
      for (auto t : {TStep::Left, TStep::Right}) {
        Chain grown = apply_tstep(c, t);
        if (seen.insert(grown).second) next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

struct CoreEntry {
  Core core;
  bool minimal;
};

namespace detail {

template <class Emit>
void grow_cores(std::vector<Chain::value_type>& prefix, std::size_t length, Chain::value_type budget, Emit& emit) {
  // budget: remaining allowance for sum(e_j - 2) over the entries still to place
  if (prefix.size() == length) {
    Chain c(prefix);
    if (is_core(c)) emit(std::move(c));
    return;
  }
  const bool end = prefix.empty() || prefix.size() + 1 == length;
  const Chain::value_type lo = length == 1 ? 4 : (end ? 3 : 2);
  for (Chain::value_type e = lo; e - 2 <= budget; ++e) {
    prefix.push_back(e);
    grow_cores(prefix, length, budget - (e - 2), emit);
    prefix.pop_back();
  }
}

}  // namespace detail

// All cores with sum(e_j - 2) <= max_sum and length <= max_length, lexicographic.
inline std::vector<CoreEntry> enumerate_cores_bounded(Chain::value_type max_sum, std::size_t max_length) {
  std::vector<Chain> found;
  auto emit = [&](Chain c) { found.push_back(std::move(c)); };
  std::vector<Chain::value_type> prefix;
  for (std::size_t len = 1; len <= max_length; ++len) detail::grow_cores(prefix, len, max_sum, emit);
  std::sort(found.begin(), found.end());
  std::vector<CoreEntry> out;
  out.reserve(found.size());
  for (auto& c : found) {
    Core core(std::move(c));
    const bool minimal = is_minimal_core(core);
    out.push_back({std::move(core), minimal});
  }
  return out;
}

// Core weight: sum(e_j - 2) + max(0, s - 2). Finitely many cores per bound.
inline Chain::value_type core_weight(const Chain& c) {
  return c.excess() + (c.size() > 2 ? static_cast<Chain::value_type>(c.size()) - 2 : 0);
}

inline std::vector<CoreEntry> enumerate_cores(Chain::value_type max_weight_sum) {
  if (max_weight_sum < 2) return {};
  auto all = enumerate_cores_bounded(max_weight_sum, static_cast<std::size_t>(max_weight_sum));
  std::vector<CoreEntry> out;
  for (auto& e : all)
    if (core_weight(e.core.chain()) <= max_weight_sum) out.push_back(std::move(e));
  return out;
}

}  // namespace hjq
