#pragma once

// Hirzebruch-Jung continued fractions: chains of weights, the fractions n/q
// they evaluate to, and the convergent recursion used to test admissibility.
//
// Orientation: a chain [b_1, ..., b_r] read left to right stands for
// n/q = b_1 - 1/(b_2 - 1/(... - 1/b_r)). Reversing the chain gives n/q'
// with q q' = 1 mod n.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "hjq/error.hpp"
#include "hjq/numeric.hpp"

namespace hjq {

// The singularity 1/n(1,q): coprime 0 < q < n.
class Fraction {
 public:
  Fraction(Integer n, Integer q) : n_(std::move(n)), q_(std::move(q)) {
    if (q_ <= 0 || q_ >= n_)
      throw Error(ErrorKind::InvalidFraction, "need 0 < q < n, got " + n_.str() + "/" + q_.str());
    if (gcd(n_, q_) != 1)
      throw Error(ErrorKind::InvalidFraction, "n and q not coprime in " + n_.str() + "/" + q_.str());
  }

  const Integer& n() const noexcept { return n_; }
  const Integer& q() const noexcept { return q_; }

  // q' with q q' = 1 mod n and 0 < q' < n.
  Integer inverse() const {
    return mod_inverse(q_, n_);
  }

  std::string str() const { return n_.str() + "/" + q_.str(); }

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  Integer n_;
  Integer q_;
};

inline std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

// Ordered weights b_1..b_r. Strict form: all entries >= 2. General form:
// entries >= 1 (chains in the middle of a blow-down).
class Chain {
 public:
  using value_type = std::int64_t;
  using const_iterator = std::vector<value_type>::const_iterator;

  Chain() = default;
  Chain(std::initializer_list<value_type> entries) : entries_(entries) {}
  explicit Chain(std::vector<value_type> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  value_type front() const { return entries_.front(); }
  value_type back() const { return entries_.back(); }
  const_iterator begin() const noexcept { return entries_.begin(); }
  const_iterator end() const noexcept { return entries_.end(); }
  const std::vector<value_type>& entries() const noexcept { return entries_; }

  bool is_strict() const {
    return std::all_of(entries_.begin(), entries_.end(), [](value_type b) { return b >= 2; });
  }
  bool is_general() const {
    return std::all_of(entries_.begin(), entries_.end(), [](value_type b) { return b >= 1; });
  }

  // Sum of (b_j - 2).
  value_type excess() const {
    value_type s = 0;
    for (auto b : entries_) s += b - 2;
    return s;
  }

  Chain reversed() const { return Chain(std::vector<value_type>(entries_.rbegin(), entries_.rend())); }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(entries_[i]);
    }
    return out + "]";
  }

  friend auto operator<=>(const Chain&, const Chain&) = default;
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<value_type> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Chain& c) { return os << c.str(); }

inline Chain concat(const Chain& a, const Chain& b) {
  std::vector<Chain::value_type> v(a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  return Chain(std::move(v));
}

inline void require_strict(const Chain& c, std::string_view who) {
  if (!c.is_strict()) throw Error(ErrorKind::InvalidChain, std::string(who) + " needs entries >= 2, got " + c.str());
}

inline void require_general(const Chain& c, std::string_view who) {
  if (!c.is_general()) throw Error(ErrorKind::InvalidChain, std::string(who) + " needs entries >= 1, got " + c.str());
}

// Convergents under p_{i+1} = a_{i+1} p_i - p_{i-1}, q_{i+1} = a_{i+1} q_i - q_{i-1}
// with p_{-1} = 0, p_0 = 1, q_0 = 0, q_1 = 1.
// p holds p_{-1}..p_s (so p[i + 1] is p_i); qconv holds q_0..q_s.
template <class Int = Integer>
struct ConvergentState {
  std::vector<Int> p;
  std::vector<Int> qconv;

  const Int& numerator(std::size_t i) const { return p[i + 1]; }
  const Int& final_numerator() const { return p.back(); }
  const Int& final_denominator() const { return qconv.back(); }
};

template <class Int = Integer>
ConvergentState<Int> convergents(const Chain& c) {
  ConvergentState<Int> st;
  st.p.reserve(c.size() + 2);
  st.qconv.reserve(c.size() + 1);
  st.p.push_back(Int(0));
  st.p.push_back(Int(1));
  st.qconv.push_back(Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Int a(c[i]);
    st.p.push_back(a * st.p[i + 1] - st.p[i]);
    if (i == 0)
      st.qconv.push_back(Int(1));
    else
      st.qconv.push_back(a * st.qconv[i] - st.qconv[i - 1]);
  }
  return st;
}

// True iff p_i > 0 for i = 0..s-1.
template <class Int = Integer>
bool convergents_admissible(const ConvergentState<Int>& st) {
  const std::size_t s = st.p.size() - 2;
  for (std::size_t i = 0; i < s; ++i)
    if (st.numerator(i) <= 0) return false;
  return true;
}

// (p_s, q_s); coprime because p_{i+1} q_i - p_i q_{i+1} = -1 throughout.
template <class Int = Integer>
struct ChainValue {
  Int numerator;
  Int denominator;

  friend bool operator==(const ChainValue&, const ChainValue&) = default;

  std::string str() const {
    if constexpr (std::is_integral_v<Int>)
      return std::to_string(numerator) + "/" + std::to_string(denominator);
    else
      return numerator.str() + "/" + denominator.str();
  }
};

// Evaluates a general-form chain. The empty chain is 1/0.
template <class Int = Integer>
ChainValue<Int> evaluate_chain(const Chain& c) {
  require_general(c, "evaluate_chain");
  Int p_prev(0), p(1), q_prev(0), q(0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (p <= 0) throw Error(ErrorKind::NotAdmissible, "convergent p_" + std::to_string(i) + " <= 0 in " + c.str());
    const Int a(c[i]);
    Int p_next = a * p - p_prev;
    Int q_next = i == 0 ? Int(1) : Int(a * q - q_prev);
    p_prev = std::move(p);
    p = std::move(p_next);
    q_prev = std::move(q);
    q = std::move(q_next);
  }
  return {p, q};
}

// Strict chains evaluate to a Fraction; anything else throws.
inline Fraction chain_fraction(const Chain& c) {
  require_strict(c, "chain_fraction");
  if (c.empty()) throw Error(ErrorKind::InvalidChain, "the empty chain has no fraction");
  auto v = evaluate_chain(c);
  return Fraction(v.numerator, v.denominator);
}

// Greedy expansion: b = ceil(n/q), continue with q/(b q - n).
inline Chain expand_fraction(const Fraction& f) {
  std::vector<Chain::value_type> out;
  Integer n = f.n(), q = f.q();
  while (true) {
    Integer b = (n + q - 1) / q;
    out.push_back(b.convert_to<Chain::value_type>());
    Integer r = b * q - n;
    if (r == 0) break;
    n = std::move(q);
    q = std::move(r);
  }
  return Chain(std::move(out));
}

inline Integer inverse_mod(const Fraction& f) { return f.inverse(); }

// Chain of n/(n-q).
inline Chain dual_fraction(const Fraction& f) { return expand_fraction(Fraction(f.n(), f.n() - f.q())); }

// "[b1,b2,...]" or bare "b1,b2,..."; spaces tolerated. "[]" is the empty chain.
inline Chain parse_chain(std::string_view text) {
  std::string body;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) body.push_back(ch);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw Error(ErrorKind::Parse, "unbalanced brackets in chain '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  } else if (!body.empty() && body.back() == ']') {
    throw Error(ErrorKind::Parse, "unbalanced brackets in chain '" + std::string(text) + "'");
  }
  std::vector<Chain::value_type> out;
  if (body.empty()) return Chain{};
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const Integer v = parse_integer(item);
    if (v > 1000000000000LL || v < -1000000000000LL)
      throw Error(ErrorKind::Parse, "chain entry out of range: " + item);
    out.push_back(v.convert_to<Chain::value_type>());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Chain(std::move(out));
}

inline Fraction parse_fraction(std::string_view text) {
  std::string body;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) body.push_back(ch);
  const auto slash = body.find('/');
  if (slash == std::string::npos) throw Error(ErrorKind::Parse, "fraction must look like n/q, got '" + std::string(text) + "'");
  return Fraction(parse_integer(body.substr(0, slash)), parse_integer(body.substr(slash + 1)));
}

}  // namespace hjq
