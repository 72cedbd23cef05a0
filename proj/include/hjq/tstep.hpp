#pragma once

// Cores and single T-chain steps. Split out of tsing.hpp so that the
// contraction module can decide admissibility for chains without a cycle.

#include <optional>
#include <string>

#include "hjq/core.hpp"

namespace hjq {

// s = 1 and e_1 >= 4, or s >= 2 with both ends >= 3 (entries >= 2).
inline bool is_core(const Chain& c) {
  if (c.empty() || !c.is_strict()) return false;
  if (c.size() == 1) return c[0] >= 4;
  return c.front() >= 3 && c.back() >= 3;
}

// A chain that is known to be a core.
class Core {
 public:
  explicit Core(Chain entries) : entries_(std::move(entries)) {
    if (!is_core(entries_)) throw Error(ErrorKind::NotACore, entries_.str() + " is not a core");
  }

  const Chain& chain() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::string str() const { return entries_.str(); }

  friend auto operator<=>(const Core&, const Core&) = default;
  friend bool operator==(const Core&, const Core&) = default;

 private:
  Chain entries_;
};

enum class TStep { Left, Right };

constexpr char letter_of(TStep t) { return t == TStep::Left ? 'L' : 'R'; }

// Left:  [a_1..a_s] -> [2, a_1, ..., a_{s-1}, a_s + 1]
// Right: [a_1..a_s] -> [a_1 + 1, a_2, ..., a_s, 2]
inline Chain apply_tstep(const Chain& c, TStep t) {
  require_strict(c, "apply_tstep");
  if (c.empty()) throw Error(ErrorKind::InvalidChain, "apply_tstep needs a nonempty chain");
  std::vector<Chain::value_type> v;
  v.reserve(c.size() + 1);
  if (t == TStep::Left) {
    v.push_back(2);
    v.insert(v.end(), c.begin(), c.end());
    v.back() += 1;
  } else {
    v.insert(v.end(), c.begin(), c.end());
    v.front() += 1;
    v.push_back(2);
  }
  return Chain(std::move(v));
}

struct UndoResult {
  enum class Status {
    Undone,          // predecessor/step are set
    BothEndsAbove2,  // no T-step to undo; the chain is a base
    BothEndsTwo,     // cannot come from the T-chain algorithm
  };
  Status status;
  std::optional<Chain> predecessor;
  std::optional<TStep> step;

  bool undone() const noexcept { return status == Status::Undone; }
};

// Inverse of apply_tstep on a strict chain of length >= 2.
inline UndoResult undo_tstep(const Chain& c) {
  require_strict(c, "undo_tstep");
  if (c.size() < 2) throw Error(ErrorKind::InvalidChain, "undo_tstep needs length >= 2, got " + c.str());
  const bool left2 = c.front() == 2;
  const bool right2 = c.back() == 2;
  if (left2 && right2) return {UndoResult::Status::BothEndsTwo, std::nullopt, std::nullopt};
  if (!left2 && !right2) return {UndoResult::Status::BothEndsAbove2, std::nullopt, std::nullopt};
  std::vector<Chain::value_type> v;
  TStep step;
  if (left2) {
    v.assign(c.begin() + 1, c.end());
    v.back() -= 1;
    step = TStep::Left;
  } else {
    v.assign(c.begin(), c.end() - 1);
    v.front() -= 1;
    step = TStep::Right;
  }
  if (left2 ? v.back() < 2 : v.front() < 2)
    throw Error(ErrorKind::MalformedChain, "undoing a T-step on " + c.str() + " leaves an entry below 2");
  return {UndoResult::Status::Undone, Chain(std::move(v)), step};
}

}  // namespace hjq
