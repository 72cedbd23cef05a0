#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams, so tests can drive it directly.

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hjq/hjq.hpp"
#include "hjq/serialize.hpp"

namespace hjq::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

inline const char* kSynopsis =
    "usage: hjq <command> [args] [--json] [--trace] [--input PATH]\n"
    "commands:\n"
    "  expand N/Q             chain of n/q\n"
    "  evaluate CHAIN         n/q of a chain (entries >= 1)\n"
    "  dual N/Q               chain of n/(n-q) and q'\n"
    "  discrepancies CHAIN    a_j of the chain\n"
    "  contract CHAIN         contract all 1s (leftmost first)\n"
    "  classify CHAIN         admissibility, core, T-recognition [--center CHAIN]\n"
    "  decompose CHAIN        core, insertion count and T-step word\n"
    "  enumerate [family|cores] --center CHAIN --max-length INT | --max-weight INT\n"
    "  accumulate example210|blowup|formation [SEED] --n0 --kmax --tol --ks2 --m0\n"
    "  verify-bounds CHAIN    --ks2 --m --lambda [--chi] [--kw2] (--delta | --delta-case L [--l] [--k])\n"
    "  survivors CHAIN        middle-copy positions of c-1-c-1-c surviving contraction\n";

struct Options {
  bool json = false;
  bool trace = false;
  std::string input_path;
  std::string positional;
  std::string tol = "1e-9";
  long long n0 = 3;
  long long kmax = 20;
  std::string center = "[4]";
  long long max_length = 3;
  long long max_weight = 3;
  std::string delta_case;
  std::optional<long long> delta, l, k;
  std::string ks2 = "0";
  std::string m = "0";
  std::optional<std::string> kw2, lambda, chi;
  std::string m0;
};

struct Outcome {
  std::string text;  // may span several lines; no trailing newline
  Json json;
};

using Handler = std::function<Outcome(const std::string&)>;

namespace detail {

inline std::string join_rationals(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
  return out;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline Outcome expand(const std::string& arg, const Options&) {
  const Fraction f = parse_fraction(arg);
  const Chain c = expand_fraction(f);
  return {c.str(), Json{{"fraction", f.str()}, {"chain", to_json(c)}}};
}

inline Outcome evaluate(const std::string& arg, const Options&) {
  const Chain c = parse_chain(arg);
  const auto v = evaluate_chain(c);
  return {v.str(), Json{{"chain", to_json(c)}, {"n", to_json(v.numerator)}, {"q", to_json(v.denominator)}, {"value", v.str()}}};
}

inline Outcome dual(const std::string& arg, const Options&) {
  const Fraction f = parse_fraction(arg);
  const Chain c = dual_fraction(f);
  const Integer qp = f.inverse();
  return {c.str() + " q'=" + qp.str(),
          Json{{"fraction", f.str()}, {"dual_fraction", f.n().str() + "/" + Integer(f.n() - f.q()).str()},
               {"dual_chain", to_json(c)}, {"inverse", to_json(qp)}}};
}

inline Outcome discrepancies_cmd(const std::string& arg, const Options& o) {
  const Chain c = parse_chain(arg);
  const Discrepancies d = discrepancies(c);
  Json j{{"chain", to_json(c)}};
  Json a = Json::array();
  for (const auto& x : d.a) a.push_back(to_json(x));
  j["a"] = a;
  std::string text = join_rationals(d.a);
  if (o.trace) {
    Json dj = to_json(d);
    j["c"] = dj["c"];
    j["d"] = dj["d"];
    text += "\nc: " + join_rationals(d.c) + "\nd: " + join_rationals(d.d);
  }
  return {text, j};
}

inline Outcome contract(const std::string& arg, const Options& o) {
  const Chain c = parse_chain(arg);
  const ContractionResult r = contract_fully(c);
  Json j{{"chain", to_json(c)}, {"result", to_json(r.chain)}};
  std::string text;
  if (o.trace) {
    j["trace"] = to_json(r.trace);
    text = r.trace.to_log();
  }
  return {text + r.chain.str(), j};
}

inline Outcome classify(const std::string& arg, const Options& o) {
  const Chain c = parse_chain(arg);
  const Chain center = parse_chain(o.center);
  Json j{{"chain", to_json(c)}};
  const bool adm = is_admissible(c);
  j["admissible"] = adm;
  std::string text = "admissible=" + yes_no(adm);
  if (!c.is_strict() || c.empty()) {
    if (adm && !c.empty()) {
      const auto v = evaluate_chain(c);
      j["value"] = v.str();
      text += " value=" + v.str();
    }
    return {text, j};
  }
  const Fraction f = chain_fraction(c);
  const bool for_chains = is_admissible_for_chains(c);
  const bool core = is_core(c);
  const bool gen_t = is_generalized_T(c, center);
  const auto t = recognize_T(f);
  j["fraction"] = f.str();
  j["admissible_for_chains"] = for_chains;
  j["core"] = core;
  j["minimal_core"] = core ? Json(is_minimal_core(c)) : Json(nullptr);
  j["center"] = to_json(center);
  j["generalized_T"] = gen_t;
  j["T"] = t ? Json{{"d", to_json(t->d)}, {"n0", to_json(t->n0)}, {"a", to_json(t->a)}} : Json(nullptr);
  text += " fraction=" + f.str() + " for_chains=" + yes_no(for_chains) + " core=" + yes_no(core);
  if (core) text += " minimal=" + yes_no(is_minimal_core(c));
  text += " generalized_T" + center.str() + "=" + yes_no(gen_t);
  text += " T=" + (t ? "(d=" + t->d.str() + ",n0=" + t->n0.str() + ",a=" + t->a.str() + ")" : std::string("no"));
  return {text, j};
}

inline Outcome decompose_cmd(const std::string& arg, const Options& o) {
  const Chain c = parse_chain(arg);
  const auto d = decompose(c);
  if (!d) throw Error(ErrorKind::NotAdmissibleForChains, c.str() + " has no core");
  Json j = to_json(*d);
  j = Json{{"chain", to_json(c)}, {"core", j["core"]}, {"u", j["u"]}, {"steps", j["steps"]}};
  std::string text = d->str();
  if (o.trace) {
    Chain cur = d->base();
    Json path = Json::array({to_json(cur)});
    std::string line = cur.str();
    for (auto t : d->steps) {
      cur = apply_tstep(cur, t);
      path.push_back(to_json(cur));
      line += std::string(" -") + letter_of(t) + "-> " + cur.str();
    }
    j["path"] = path;
    text += "\n" + line;
  }
  return {text, j};
}

inline Outcome enumerate(const std::string& arg, const Options& o) {
  std::string text;
  Json list = Json::array();
  if (arg == "cores") {
    for (const auto& e : enumerate_cores(o.max_weight)) {
      text += (text.empty() ? "" : "\n") + e.core.str() + (e.minimal ? " minimal" : " non-minimal");
      list.push_back(Json{{"core", to_json(e.core.chain())}, {"minimal", e.minimal}});
    }
    return {text, Json{{"max_weight", o.max_weight}, {"cores", list}}};
  }
  if (!arg.empty() && arg != "family")
    throw Error(ErrorKind::Parse, "enumerate expects 'family' or 'cores', got '" + arg + "'");
  if (o.max_length < 0) throw Error(ErrorKind::InvalidArgument, "max-length must be >= 0");
  const Chain center = parse_chain(o.center);
  for (const auto& c : enumerate_generalized_T(center, static_cast<std::size_t>(o.max_length))) {
    text += (text.empty() ? "" : "\n") + c.str();
    list.push_back(to_json(c));
  }
  return {text, Json{{"center", to_json(center)}, {"max_length", o.max_length}, {"chains", list}}};
}

inline Outcome accumulate(const std::string& arg, const Options& o) {
  std::istringstream words(arg);
  std::string family, seed;
  words >> family >> seed;
  const Rational tol = parse_rational(o.tol);
  const Integer ks2 = parse_integer(o.ks2);
  std::optional<AccumSequence> naive;
  AccumSequence seq = [&] {
    if (family == "example210") {
      naive = example210_family(o.n0, o.kmax, true);
      return example210_family(o.n0, o.kmax);
    }
    const Integer m0 = o.m0.empty() ? Integer(0) : parse_integer(o.m0);
    if (family == "blowup") return blowup_family(parse_chain(seed), o.kmax, ks2, m0);
    if (family == "formation") return formation_family(parse_fraction(seed), o.kmax, ks2, m0);
    throw Error(ErrorKind::Parse, "unknown family '" + family + "' (example210, blowup, formation)");
  }();
  const LimitReport rep = limit_of(seq, tol);

  std::string text = "k\tchain\tn/q\tK^2\tK^2_decimal";
  if (o.trace) text += "\tbridge\tdiscrepancies_drop";
  for (const auto& t : seq.terms) {
    text += "\n" + std::to_string(t.k) + "\t" + t.chain.str() + "\t" + t.fraction.str() + "\t" + to_string(t.kw2) +
            "\t" + to_decimal(t.kw2);
    if (o.trace)
      text += t.witness ? "\t" + to_string(t.witness->bridge) + "\t" + yes_no(t.witness->discrepancies_drop) : "\t-\t-";
  }
  text += "\n# family: " + seq.family_name();
  text += "\n# monotonicity: " + std::string(monotonicity_name(rep.monotonicity));
  text += "\n# last: " + to_string(rep.last) + " (" + to_decimal(rep.last) + ")";
  text += "\n# last difference: " + to_string(rep.differences.back()) + " (" + to_decimal(rep.differences.back()) + ")";
  text += "\n# converged: " + yes_no(rep.converged) + " (tol " + to_string(tol) + ")";
  if (rep.target) {
    text += "\n# target: " + to_string(*rep.target) + " (" + to_decimal(*rep.target) + ")";
    text += "\n# gap: " + to_string(*rep.gap) + " (" + to_decimal(*rep.gap) + ")";
  }
  Json j = to_json(seq);
  j["limit"] = to_json(rep);
  if (naive) {
    const Rational& nl = naive->terms.back().kw2;
    text += "\n# with m(k) = k+1 the last K^2 would be " + to_string(nl) + " (" + to_decimal(nl) + ")";
    j["naive_m_last"] = to_json(nl);
  }
  return {text, j};
}

inline Outcome verify_bounds(const std::string& arg, const Options& o) {
  const Chain c = parse_chain(arg);
  if (!o.lambda) throw Error(ErrorKind::IncompleteLedger, "verify-bounds needs --lambda");
  long long delta = 0;
  if (o.delta) {
    delta = *o.delta;
  } else if (!o.delta_case.empty()) {
    delta = delta_from_case({parse_delta_label(o.delta_case), o.l, o.k});
  } else {
    throw Error(ErrorKind::MissingParameter, "verify-bounds needs --delta or --delta-case");
  }
  const VolumeLedger ledger =
      k2_ledger(c, parse_integer(o.ks2), parse_integer(o.m), parse_rational(*o.lambda),
                o.chi ? std::optional<Integer>(parse_integer(*o.chi)) : std::nullopt);
  if (o.kw2) require_consistent(ledger, parse_rational(*o.kw2));
  const BoundReport rep = check_main_bounds(c, ledger, delta);
  const BoundCheck gen = check_genT_delta_bound(c, delta);
  Json checks = to_json(rep);
  checks.push_back(to_json(gen));
  std::string text = "K_W^2=" + to_string(ledger.kw2) + " K_X^2=" + to_string(ledger.kx2) +
                     " correction=" + to_string(ledger.correction) + " delta=" + std::to_string(delta);
  for (const auto* b : {&rep.excess, &rep.length, &rep.euler, &rep.noether, &gen}) {
    text += "\n" + b->inequality + ": " + std::string(verdict_name(b->verdict));
    if (b->slack) text += " (slack " + to_string(*b->slack) + ")";
  }
  return {text, Json{{"chain", to_json(c)}, {"delta", delta}, {"ledger", to_json(ledger)}, {"checks", checks}}};
}

inline Outcome survivors(const std::string& arg, const Options& o) {
  const Chain c = parse_chain(arg);
  const SurvivingCenter s = surviving_center(c);
  std::string text = "first=" + std::to_string(s.first) + " last=" + std::to_string(s.last);
  Json j{{"chain", to_json(c)}, {"first", s.first}, {"last", s.last}, {"survivors", s.survivors}};
  if (o.trace) {
    j["contracted"] = to_json(s.contracted);
    text += " contracted=" + s.contracted.str();
  }
  return {text, j};
}

inline int exit_code_for(const Error& e) { return e.kind() == ErrorKind::Parse ? kUsageError : kDomainError; }

inline std::string single_line(std::string s) {
  for (auto& ch : s)
    if (ch == '\n') ch = ' ';
  return s;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hirzebruch-Jung chains, generalized T-singularities and accumulation of K^2"};
  app.set_help_flag("-h,--help", "show help");
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_extras();
  Options o;
  app.add_flag("--json", o.json, "structured output");
  app.add_flag("--trace", o.trace, "attach contraction traces or step witnesses");
  app.add_option("--input", o.input_path, "read one input per line from PATH");

  struct Cmd {
    const char* name;
    const char* help;
    Outcome (*fn)(const std::string&, const Options&);
    bool needs_positional;
  };
  const Cmd cmds[] = {
      {"expand", "chain of n/q", detail::expand, true},
      {"evaluate", "n/q of a chain", detail::evaluate, true},
      {"dual", "chain of n/(n-q)", detail::dual, true},
      {"discrepancies", "discrepancies a_j", detail::discrepancies_cmd, true},
      {"contract", "contract all 1s", detail::contract, true},
      {"classify", "classify a chain", detail::classify, true},
      {"decompose", "core, u and T-steps", detail::decompose_cmd, true},
      {"enumerate", "enumerate a family or cores", detail::enumerate, false},
      {"accumulate", "accumulation families", detail::accumulate, true},
      {"verify-bounds", "bound checks", detail::verify_bounds, true},
      {"survivors", "surviving middle entries", detail::survivors, true},
  };
  std::vector<std::string> positionals;
  std::vector<std::pair<CLI::App*, const Cmd*>> subs;
  for (const auto& cmd : cmds) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    if (std::string(cmd.name) == "accumulate") {
      sub->add_option("--n0", o.n0);
      sub->add_option("--kmax", o.kmax);
      sub->add_option("--tol", o.tol);
      sub->add_option("--ks2", o.ks2);
      sub->add_option("--m0", o.m0);
    } else if (std::string(cmd.name) == "enumerate") {
      sub->add_option("--center", o.center);
      sub->add_option("--max-length", o.max_length);
      sub->add_option("--max-weight", o.max_weight);
    } else if (std::string(cmd.name) == "classify") {
      sub->add_option("--center", o.center);
    } else if (std::string(cmd.name) == "verify-bounds") {
      sub->add_option("--delta", o.delta);
      sub->add_option("--delta-case", o.delta_case);
      sub->add_option("--l", o.l);
      sub->add_option("--k", o.k);
      sub->add_option("--ks2", o.ks2);
      sub->add_option("--m", o.m);
      sub->add_option("--kw2", o.kw2);
      sub->add_option("--lambda", o.lambda);
      sub->add_option("--chi", o.chi);
    }
    subs.emplace_back(sub, &cmd);
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help() << kSynopsis;
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis;
    return kUsageError;
  }

  const Cmd* chosen = nullptr;
  for (auto& [sub, cmd] : subs)
    if (sub->parsed()) {
      chosen = cmd;
    }
  positionals = app.remaining(true);
  for (const auto& p : positionals)
    if (p.size() > 1 && p[0] == '-' && !std::isdigit(static_cast<unsigned char>(p[1]))) {
      err << "error: unknown option " << p << "\n" << kSynopsis;
      return kUsageError;
    }

  std::vector<std::string> inputs;
  const bool batch = !o.input_path.empty();
  if (batch) {
    std::ifstream in(o.input_path);
    if (!in) {
      err << "error: cannot read " << o.input_path << "\n";
      return kUsageError;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      // Extra positional words (e.g. the family of accumulate) prefix each line.
      std::string prefix;
      for (const auto& p : positionals) prefix += p + " ";
      inputs.push_back(prefix + line);
    }
  } else {
    if (chosen->needs_positional && positionals.empty()) {
      err << "error: " << chosen->name << " needs an argument\n" << kSynopsis;
      return kUsageError;
    }
    std::string joined;
    for (std::size_t i = 0; i < positionals.size(); ++i) joined += (i ? " " : "") + positionals[i];
    inputs.push_back(joined);
  }

  int status = kOk;
  for (const auto& input : inputs) {
    try {
      Outcome res = chosen->fn(input, o);
      if (o.json)
        out << res.json.dump() << "\n";
      else
        out << (batch ? detail::single_line(res.text) : res.text) << "\n";
    } catch (const Error& e) {
      const int code = detail::exit_code_for(e);
      status = std::max(status, code);
      if (batch) {
        if (o.json)
          out << Json{{"input", input}, {"error", e.what()}}.dump() << "\n";
        else
          out << "error: " << e.what() << "\n";
      } else {
        err << "error: " << e.what() << "\n";
        if (code == kUsageError) err << kSynopsis;
      }
    }
  }
  return status;
}

}  // namespace hjq::cli
