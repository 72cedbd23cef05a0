#pragma once

// Exact integer and rational types plus their text forms.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "hjq/error.hpp"

namespace hjq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

// Inverse of a modulo n in [0, n); throws when gcd(a, n) != 1.
inline Integer mod_inverse(const Integer& a, const Integer& n) {
  Integer old_r = a % n, r = n;
  if (old_r < 0) old_r += n;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer quot = old_r / r;
    Integer tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error(ErrorKind::InvalidArgument, "value has no inverse modulo n");
  Integer out = old_s % n;
  if (out < 0) out += n;
  return out;
}

inline Integer pow10(std::size_t e) {
  Integer r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= 10;
  return r;
}

// Always "p/q", also for integers ("3/1").
inline std::string to_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

// Fixed-point rendering with `digits` fractional digits, round-half-even.
inline std::string to_decimal(const Rational& r, std::size_t digits = 12) {
  Integer num = numerator_of(r);
  const Integer den = denominator_of(r);
  const bool negative = num < 0;
  if (negative) num = -num;
  num *= pow10(digits);
  Integer quot = num / den;
  const Integer rem = num % den;
  const Integer twice = rem * 2;
  if (twice > den || (twice == den && (quot % 2) == 1)) quot += 1;
  std::string body = quot.str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out = body.substr(0, body.size() - digits);
  if (digits > 0) out += "." + body.substr(body.size() - digits);
  if (negative && quot != 0) out.insert(0, "-");
  return out;
}

inline Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  if (i == text.size()) throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
  Integer v = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
    v = v * 10 + (text[i] - '0');
  }
  return negative ? Integer(-v) : v;
}

// Accepts "p/q", "-12", "0.001", "1e-9", "2.5E+3".
inline Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (auto slash = trimmed.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(trimmed.substr(0, slash));
    Integer q = parse_integer(trimmed.substr(slash + 1));
    if (q == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }
  std::string_view mantissa = trimmed;
  long long exponent = 0;
  if (auto e = trimmed.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = trimmed.substr(0, e);
    const Integer ev = parse_integer(trimmed.substr(e + 1));
    if (ev > 100000 || ev < -100000) throw Error(ErrorKind::Parse, "exponent out of range in '" + std::string(text) + "'");
    exponent = ev.convert_to<long long>();
  }
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (i < mantissa.size() && (mantissa[i] == '+' || mantissa[i] == '-')) negative = mantissa[i++] == '-';
  bool seen_point = false, seen_digit = false;
  for (; i < mantissa.size(); ++i) {
    const char ch = mantissa[i];
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_point) --exponent;
    } else {
      throw Error(ErrorKind::Parse, "expected a rational or decimal, got '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw Error(ErrorKind::Parse, "expected a rational or decimal, got '" + std::string(text) + "'");
  Integer value = parse_integer(digits);
  if (negative) value = -value;
  if (exponent >= 0) return Rational(value * pow10(static_cast<std::size_t>(exponent)));
  return Rational(value, pow10(static_cast<std::size_t>(-exponent)));
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace hjq
