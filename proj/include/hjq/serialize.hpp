#pragma once

// JSON forms of the library's values. Rationals become {"value": "p/q",
// "decimal": "x.xxxxxxxxxxxx"}; chains become integer arrays.

#include <json.hpp>

#include "hjq/accumulation.hpp"
#include "hjq/contraction.hpp"
#include "hjq/core.hpp"
#include "hjq/geometry.hpp"
#include "hjq/tsing.hpp"

namespace hjq {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return Json{{"value", to_string(r)}, {"decimal", to_decimal(r)}}; }

inline Json to_json(const Integer& i) {
  if (i >= INT64_MIN && i <= INT64_MAX) return i.convert_to<std::int64_t>();
  return i.str();
}

inline Json to_json(const Chain& c) { return Json(c.entries()); }

inline Json to_json(const Fraction& f) { return Json{{"n", to_json(f.n())}, {"q", to_json(f.q())}, {"text", f.str()}}; }

inline Json to_json(const ContractionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back(Json{{"index", s.index}, {"before", to_json(s.before)}, {"after", to_json(s.after)}});
  return steps;
}

inline Json to_json(const Decomposition& d) {
  return Json{{"core", to_json(d.core.chain())}, {"u", d.u}, {"steps", d.word()}};
}

inline Json to_json(const Discrepancies& d) {
  Json a = Json::array(), c = Json::array(), dd = Json::array();
  for (const auto& x : d.a) a.push_back(to_json(x));
  for (const auto& x : d.c) c.push_back(to_json(x));
  for (const auto& x : d.d) dd.push_back(to_json(x));
  return Json{{"a", a}, {"c", c}, {"d", dd}};
}

inline Json to_json(const BoundCheck& b) {
  auto opt = [](const std::optional<Rational>& r) { return r ? Json(to_string(*r)) : Json(nullptr); };
  return Json{{"inequality", b.inequality},
              {"lhs", opt(b.lhs)},
              {"rhs", opt(b.rhs)},
              {"slack", opt(b.slack)},
              {"slack_decimal", b.slack ? Json(to_decimal(*b.slack)) : Json(nullptr)},
              {"verdict", std::string(verdict_name(b.verdict))}};
}

inline Json to_json(const BoundReport& r) {
  return Json::array({to_json(r.excess), to_json(r.length), to_json(r.euler), to_json(r.noether)});
}

inline Json to_json(const VolumeLedger& l) {
  Json j{{"kw2", to_json(l.kw2)},       {"ks2", to_json(l.ks2)}, {"kx2", to_json(l.kx2)},
         {"m", to_json(l.m)},           {"correction", to_json(l.correction)}};
  j["lambda"] = l.lambda ? to_json(*l.lambda) : Json(nullptr);
  j["chi"] = l.chi ? to_json(*l.chi) : Json(nullptr);
  return j;
}

inline Json to_json(const AccumTerm& t) {
  Json j{{"k", t.k},
         {"chain", to_json(t.chain)},
         {"fraction", t.fraction.str()},
         {"kw2", to_string(t.kw2)},
         {"kw2_decimal", to_decimal(t.kw2)},
         {"m", to_json(t.m)}};
  if (t.witness)
    j["witness"] = Json{{"bridge_degree", to_json(t.witness->bridge)},
                        {"discrepancies_drop", t.witness->discrepancies_drop}};
  return j;
}

inline Json to_json(const AccumSequence& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(to_json(t));
  return Json{{"family", s.family_name()}, {"ks2", to_json(s.ks2)}, {"m0", to_json(s.m0)}, {"terms", terms}};
}

inline Json to_json(const LimitReport& r) {
  Json j{{"monotonicity", std::string(monotonicity_name(r.monotonicity))},
         {"last", to_json(r.last)},
         {"tol", to_json(r.tol)},
         {"converged", r.converged}};
  if (!r.differences.empty()) j["last_difference"] = to_json(r.differences.back());
  j["target"] = r.target ? to_json(*r.target) : Json(nullptr);
  j["gap"] = r.gap ? to_json(*r.gap) : Json(nullptr);
  return j;
}

}  // namespace hjq
