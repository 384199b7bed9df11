#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gpi/canonical.hpp"
#include "gpi/catalog.hpp"
#include "gpi/decide.hpp"
#include "gpi/parse.hpp"
#include "gpi/verify.hpp"

using namespace gpi;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kOutOfScope = 3 };

struct Globals {
  std::uint64_t p = 0;
  int m = 4;
  bool unital = false;
  bool nonunital = false;
  std::string format = "text";

  bool machine() const { return format == "machine"; }
  FieldSpec field() const { return p ? FieldSpec(p) : FieldSpec{}; }
  AlgebraSpec spec() const { return AlgebraSpec(m, unital, field()); }
};

void emit(const Globals& g, const json& record, const std::string& text) {
  if (g.machine())
    std::cout << record.dump() << "\n";
  else
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  json a = json::object();
  for (const auto& [v, e] : w->assignment) a["x" + std::to_string(v)] = to_string(e);
  return {{"assignment", a}, {"value", to_string(w->value)}};
}

std::string strategy_label(const Globals& g, Strategy s) {
  std::string label = to_string(s);
  if (g.unital && g.p != 0) label += " (infinite-field semantics)";
  return label;
}

std::optional<Strategy> parse_strategy(const std::string& s) {
  if (s.empty() || s == "auto") return std::nullopt;
  if (s == "multilinear") return Strategy::Multilinear;
  if (s == "generic") return Strategy::Generic;
  throw CLI::ValidationError("--strategy", "expected auto, multilinear or generic");
}

SSElement parse_ss(const std::string& text, const Globals& g) {
  auto u = as_ss_element(parse_expr(text, g.field(), true));
  if (!u) throw ParseError(0, "'" + text + "' is not a semi-standard monomial");
  return *u;
}

int run_eval(const Globals& g, const std::string& expr, const std::vector<std::string>& subs) {
  const AlgebraSpec spec = g.spec();
  NCPoly f = parse_expr(expr, g.field(), g.unital);
  Evaluation<Scalar> at;
  for (const auto& s : subs) {
    auto eq = s.find('=');
    if (eq == std::string::npos || s.size() < 3 || s[0] != 'x')
      throw ParseError(0, "substitution '" + s + "' must look like x1=<element>");
    Var v = static_cast<Var>(std::stoul(s.substr(1, eq - 1)));
    at.insert_or_assign(v, parse_grassmann(s.substr(eq + 1), spec));
  }
  for (Var v : f.variables())
    if (!at.count(v)) throw ParseError(0, "no value given for x" + std::to_string(v));
  GElem value = evaluate(f, at, spec);
  emit(g, {{"command", "eval"}, {"algebra", to_string(spec)}, {"value", to_string(value)}},
       to_string(value));
  return kOk;
}

int run_nf(const Globals& g, const std::string& expr) {
  NormalForm nf = nf_t3(parse_expr(expr, g.field(), g.unital));
  json terms = json::array();
  for (const auto& [u, c] : nf.terms) terms.push_back({{"monomial", to_string(u)}, {"coefficient", to_string(c)}});
  emit(g, {{"command", "nf"}, {"scalar", to_string(nf.scalar)}, {"terms", terms},
           {"text", to_string(nf)}},
       to_string(nf));
  return kOk;
}

int run_classify(const Globals& g, const std::string& expr, const std::string& strategy) {
  const AlgebraSpec spec = g.spec();
  Classification c = classify(parse_expr(expr, g.field(), g.unital), spec, parse_strategy(strategy));
  json rec{{"command", "classify"},
           {"algebra", to_string(spec)},
           {"verdict", to_string(c.verdict)},
           {"strategy", strategy_label(g, c.strategy)},
           {"infinite_field_semantics", c.infinite_field_semantics},
           {"witness", witness_json(c.witness)}};
  std::string text = to_string(c);
  if (c.infinite_field_semantics) text += "note: generic (infinite-field semantics)\n";
  emit(g, rec, text);
  return kOk;
}

int run_compare(const Globals& g, const std::string& a, const std::string& b) {
  SSElement u = parse_ss(a, g), v = parse_ss(b, g);
  int r = venkova_compare(u, v);
  const char* rel = r > 0 ? ">" : r < 0 ? "<" : "=";
  emit(g, {{"command", "compare"}, {"u", to_string(u)}, {"v", to_string(v)}, {"result", r}},
       to_string(u) + " " + rel + " " + to_string(v));
  return kOk;
}

GeneratorSet pick_set(const Globals& g, const std::string& which, bool verbatim) {
  const AlgebraSpec spec = g.spec();
  if (which == "t-ideal") return t_ideal_generators(spec);
  if (which == "cp") return cp_generators(spec, verbatim);
  throw CLI::ValidationError("set", "expected t-ideal or cp");
}

int run_catalog(const Globals& g, const std::string& which, bool verbatim, bool verbose) {
  GeneratorSet set = pick_set(g, which, verbatim);
  json items = json::array();
  std::string text = "# " + set.name + (set.note.empty() ? "" : " (" + set.note + ")") + "\n";
  if (set.infinite_field_semantics) text += "# generic (infinite-field semantics)\n";
  for (const auto& e : set.elements) {
    items.push_back({{"label", e.label}, {"expr", e.expr}, {"expanded", to_string(e.poly)}});
    text += (verbose ? to_string(e.poly) : e.expr) + "  # " + e.label + "\n";
  }
  json rec{{"command", "catalog"}, {"set", set.name}, {"note", set.note},
           {"infinite_field_semantics", set.infinite_field_semantics}, {"generators", items}};
  if (set.r0) rec["r0"] = set.r0->get_str();
  emit(g, rec, text);
  return kOk;
}

int run_member(const Globals& g, const std::string& expr, const std::string& which,
               const std::vector<std::string>& gens, bool verbatim, MembershipBounds bounds) {
  NCPoly f = parse_expr(expr, g.field(), g.unital);
  std::vector<NCPoly> polys;
  std::vector<std::string> labels;
  if (!gens.empty()) {
    for (const auto& s : gens) {
      polys.push_back(parse_expr(s, g.field(), g.unital));
      labels.push_back(s);
    }
  } else {
    GeneratorSet set = pick_set(g, which, verbatim);
    for (const auto& e : set.elements) {
      polys.push_back(e.poly);
      labels.push_back(e.label);
    }
  }
  MembershipReport r = tspace_member_bounded(f, polys, bounds);
  json entries = json::array();
  for (const auto& e : r.combination)
    entries.push_back({{"generator", labels[e.generator]},
                       {"coefficient", to_string(e.coefficient)},
                       {"instance", to_string(e.instance)}});
  emit(g, {{"command", "member"}, {"member", r.member}, {"verified", r.verified},
           {"truncated", r.truncated}, {"candidates", r.candidates}, {"combination", entries}},
       to_string(r, labels));
  return kOk;
}

int run_verify(const Globals& g, const std::string& suite, std::optional<std::uint32_t> n,
               bool m_given, bool p_given, std::uint64_t seed) {
  VerifyOptions o;
  if (m_given) o.m = g.m;
  if (p_given) o.p = g.p;
  o.n = n;
  o.seed = seed;
  auto results = run_suite(suite, o);
  std::size_t failed = 0;
  for (const auto& r : results) {
    failed += !r.passed;
    emit(g, {{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}},
         std::string(r.passed ? "PASS" : "FAIL") + "  [" + r.suite + "] " + r.name +
             (r.detail.empty() ? "" : "  -- " + r.detail));
  }
  emit(g, {{"summary", true}, {"checks", results.size()}, {"failed", failed}},
       std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) +
           " checks passed");
  return failed || results.empty() ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grassmann polynomial identities: exact evaluation, normal forms, and checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--char", g.p, "field characteristic: 0 or an odd prime");
  app.add_option("--m", g.m, "number of Grassmann generators")->check(CLI::Range(1, 62));
  auto* u = app.add_flag("--unital", g.unital, "unitary algebra G(m)");
  auto* nu = app.add_flag("--nonunital", g.nonunital, "nonunitary algebra G0(m) (default)");
  u->excludes(nu);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "machine"}));

  std::string expr, expr2, strategy, set = "cp", suite;
  std::vector<std::string> subs, gens;
  bool verbatim = false, expand = false;
  MembershipBounds bounds;
  std::optional<std::uint32_t> n;
  std::uint64_t seed = VerifyOptions{}.seed;

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial at Grassmann elements");
  eval->add_option("expr", expr)->required();
  eval->add_option("-s,--subst", subs, "x<i>=<element>, e.g. x1=e{1,2}+3")
      ->required()
      ->allow_extra_args(false);

  auto* nf = app.add_subcommand("nf", "normal form modulo T^(3)");
  nf->add_option("expr", expr)->required();

  auto* cls = app.add_subcommand("classify", "identity / central / noncentral");
  cls->add_option("expr", expr)->required();
  cls->add_option("--strategy", strategy, "auto, multilinear or generic");

  auto* cmp = app.add_subcommand("compare", "compare two semi-standard monomials");
  cmp->add_option("u", expr)->required();
  cmp->add_option("v", expr2)->required();

  auto* cat = app.add_subcommand("catalog", "print a generating set");
  cat->add_option("set", set, "t-ideal or cp")->check(CLI::IsMember({"t-ideal", "cp"}));
  cat->add_flag("--verbatim", verbatim, "literal chain length floor(m/2)");
  cat->add_flag("--expand", expand, "print generators fully expanded");

  auto* mem = app.add_subcommand("member", "bounded T-space membership");
  mem->add_option("expr", expr)->required();
  mem->add_option("--set", set, "t-ideal or cp")->check(CLI::IsMember({"t-ideal", "cp"}));
  mem->add_option("-g,--generator", gens, "explicit generator (repeatable)")
      ->allow_extra_args(false);
  mem->add_flag("--verbatim", verbatim);
  mem->add_option("--max-degree", bounds.max_word_degree, "longest substituted word");
  mem->add_option("--max-words", bounds.max_words, "words per substituted variable");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string names = "all";
  for (const auto& s : suite_names()) names += ", " + s;
  ver->add_option("suite", suite, names)->required();
  ver->add_option("--n", n, "circle chain length");
  ver->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (g.p == 2) throw OutOfScope("characteristic 2 is out of scope");
    if (g.p != 0 && !is_prime(g.p)) throw PreconditionError("--char must be 0 or an odd prime");
    if (g.nonunital) g.unital = false;
    if (*eval) return run_eval(g, expr, subs);
    if (*nf) return run_nf(g, expr);
    if (*cls) return run_classify(g, expr, strategy);
    if (*cmp) return run_compare(g, expr, expr2);
    if (*cat) return run_catalog(g, set, verbatim, expand);
    if (*mem) return run_member(g, expr, set, gens, verbatim, bounds);
    if (*ver)
      return run_verify(g, suite, n, app.count("--m") > 0, app.count("--char") > 0, seed);
  } catch (const OutOfScope& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return kOutOfScope;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
