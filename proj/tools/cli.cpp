#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "relfork/check.hpp"
#include "relfork/construction_config.hpp"
#include "relfork/error.hpp"
#include "relfork/model_io.hpp"
#include "relfork/suites.hpp"

namespace relfork {

namespace {

using nlohmann::json;

struct Options {
  std::string model;
  std::string star;
  std::string S;
  std::string t;
  std::string s;
  std::string config;
  std::string suite;
  std::string format = "text";
  std::string bind;
  std::string formula;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t window = 1000;
  std::uint64_t bound = 0;  // defaults to window
  std::uint64_t support_bound = 64;
  std::uint64_t trials = 200;
  bool timing = false;
};

struct CheckLine {
  std::string name;
  std::string formula;
  std::string status;  // pass | FAIL | undecidable | info
  std::uint64_t count = 0;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> facts;  // header lines
  std::vector<CheckLine> checks;
  json extra = json::object();
  std::vector<std::string> body;  // free text (human format only)
};

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

int exit_code(const Report& r) {
  bool failed = false;
  bool undecided = false;
  for (const auto& c : r.checks) {
    failed |= c.status == "FAIL";
    undecided |= c.status == "undecidable";
  }
  return failed ? 1 : (undecided ? 2 : 0);
}

void emit(const Report& r, const Options& o, std::ostream& out, double ms) {
  std::size_t passed = 0, failed = 0, other = 0;
  for (const auto& c : r.checks) {
    if (c.status == "pass") ++passed;
    else if (c.status == "FAIL") ++failed;
    else ++other;
  }
  const int code = exit_code(r);
  const char* verdict = code == 0 ? "PASS" : (code == 1 ? "FAIL" : "UNDECIDED");
  std::string config_text;
  for (const auto& [k, v] : r.facts) config_text += k + "=" + v + ";";

  if (o.format == "json") {
    json doc;
    if (r.checks.empty()) {
      doc["command"] = r.command;
      doc["config_digest"] = digest(config_text);
      for (auto it = r.extra.begin(); it != r.extra.end(); ++it) doc[it.key()] = it.value();
      out << doc.dump(2) << "\n";
      return;
    }
    doc["command"] = r.command;
    doc["config_digest"] = digest(config_text);
    json facts = json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    doc["config"] = facts;
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name}, {"formula", c.formula}, {"status", c.status}, {"count", c.count},
                        {"detail", c.detail}});
    }
    doc["checks"] = checks;
    for (auto it = r.extra.begin(); it != r.extra.end(); ++it) doc[it.key()] = it.value();
    doc["summary"] = {{"passed", passed}, {"failed", failed}, {"other", other}, {"total", r.checks.size()},
                      {"result", verdict}};
    if (o.timing) doc["wall_time_ms"] = ms;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "command: " << r.command << "\n";
  for (const auto& [k, v] : r.facts) out << k << ": " << v << "\n";
  out << "config digest: " << digest(config_text) << "\n";
  for (const auto& line : r.body) out << line << "\n";
  for (const auto& c : r.checks) {
    out << "  [" << c.status << "] " << c.name;
    if (!c.formula.empty()) out << "  " << c.formula;
    out << "  (" << c.count << ")";
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  if (r.checks.empty()) return;
  out << "result: " << verdict << " (" << passed << " passed, " << failed << " failed, " << other
      << " other, of " << r.checks.size() << ")\n";
  if (o.timing) out << "wall time: " << std::fixed << std::setprecision(1) << ms << " ms\n";
}

unsigned thread_count() {
  if (const char* env = std::getenv("RELFORK_THREADS")) {
    try {
      const unsigned long n = std::stoul(env);
      if (n >= 1) return static_cast<unsigned>(std::min<unsigned long>(n, 256));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

bool has_star(const Options& o) { return !o.star.empty() || !o.config.empty(); }

std::shared_ptr<const Construction> construction_from(const Options& o) {
  ConstructionConfig c;
  if (!o.config.empty()) {
    c = load_config(o.config);
  } else {
    c.kind = parse_star_kind(o.star);
    c.S = parse_nat_list(o.S);
    if (c.kind == StarKind::Tree) {
      if (o.t.empty()) throw Error("usage", "--star tree needs --t");
      c.control = o.t;
    } else if (c.kind == StarKind::Seq) {
      if (o.s.empty()) throw Error("usage", "--star seq needs --s");
      c.control = o.s;
    }
  }
  return build(c);
}

LazyCheckOptions lazy_options(const Options& o) {
  LazyCheckOptions l;
  l.support_bound = o.support_bound;
  l.trials = o.trials;
  l.seed = o.seed;
  l.window = o.window;
  l.urelement_bound = o.bound ? o.bound : o.window;
  return l;
}

Strategy strategy_from(const Options& o) {
  if (o.samples > 0 && !o.exhaustive) return Strategy::sampled(o.samples, o.seed);
  return Strategy::exhaustive();
}

std::string env_text(const std::vector<std::pair<std::string, FiniteRelation>>& env) {
  std::string out;
  for (const auto& [name, r] : env) {
    if (!out.empty()) out += ' ';
    out += name + "=" + r.to_string();
  }
  return out;
}

void describe_model(Report& r, const Options& o, const AlgebraModel& m) {
  r.facts.emplace_back("model", o.model);
  r.facts.emplace_back("base size", std::to_string(m.base_size()));
  r.facts.emplace_back("carrier size", std::to_string(m.carrier().size()));
}

void describe_star(Report& r, const Construction& c) {
  r.facts.emplace_back("construction", c.describe());
}

CheckLine finite_check(const std::string& name, const Formula& f, const AlgebraModel& m, const Strategy& st) {
  CheckLine line{name, print(f), "pass", 0, ""};
  auto rep = check_formula(f, m, st, thread_count());
  line.count = rep.assignments;
  if (!rep.valid) {
    line.status = "FAIL";
    line.detail = "counterexample " + env_text(*rep.counterexample);
  }
  return line;
}

CheckLine lazy_check(const std::string& name, const Formula& f, const PairingFunction& pf,
                     const LazyCheckOptions& lo) {
  auto res = check_formula_lazy(f, pf, lo, name);
  return CheckLine{name, res.formula, to_string(res.status), res.instances, res.witness};
}

Report cmd_check(const Options& o) {
  Report r;
  if (o.suite.empty()) throw Error("usage", "check needs --suite");
  const auto texts = axiom_suite_text(o.suite);
  r.facts.emplace_back("suite", o.suite);
  if (has_star(o)) {
    auto c = construction_from(o);
    describe_star(r, *c);
    const auto pf = as_pairing_function(c);
    const auto lo = lazy_options(o);
    r.facts.emplace_back("trials", std::to_string(lo.trials));
    r.facts.emplace_back("support bound", std::to_string(lo.support_bound));
    r.facts.emplace_back("window", std::to_string(lo.window));
    r.facts.emplace_back("urelement bound", std::to_string(lo.urelement_bound));
    r.facts.emplace_back("seed", std::to_string(lo.seed));
    for (std::size_t i = 0; i < texts.size(); ++i) {
      r.checks.push_back(lazy_check("axiom " + std::to_string(i + 1), *parse_formula(texts[i]), pf, lo));
    }
    return r;
  }
  if (o.model.empty()) throw Error("usage", "check needs --model, --star or --config");
  const auto m = load_model(o.model);
  describe_model(r, o, m);
  const auto st = strategy_from(o);
  r.facts.emplace_back("strategy", st.kind == Strategy::Kind::Exhaustive
                                       ? "exhaustive"
                                       : "sampled(" + std::to_string(st.samples) + ", seed " +
                                             std::to_string(st.seed) + ")");
  for (std::size_t i = 0; i < texts.size(); ++i) {
    r.checks.push_back(finite_check("axiom " + std::to_string(i + 1), *parse_formula(texts[i]), m, st));
  }
  return r;
}

Report cmd_fix(const Options& o) {
  Report r;
  if (!has_star(o)) throw Error("usage", "fix needs --star or --config");
  auto c = construction_from(o);
  describe_star(r, *c);
  const auto pf = as_pairing_function(c);
  const auto win = range_region(0, o.window);
  const auto region = c->candidate_region();
  r.facts.emplace_back("window", "[0," + std::to_string(o.window) + ")");

  std::function<std::vector<Nat>(const std::vector<Nat>&)> query;
  std::string notion;
  switch (c->kind()) {
    case StarKind::Basic:
      notion = "u*u = u";
      query = [&](const std::vector<Nat>& xs) { return fix_t_members(BT::bin(BT::nil(), BT::nil()), pf, xs); };
      break;
    case StarKind::Tree: {
      const BT t = *c->control_tree();
      notion = "map(" + t.to_string() + ", *, u) = u";
      query = [&, t](const std::vector<Nat>& xs) { return fix_t_members(t, pf, xs); };
      break;
    }
    case StarKind::Pi:
    case StarKind::Rho: {
      const Proj which = c->kind() == StarKind::Pi ? Proj::Pi : Proj::Rho;
      notion = std::string("fix_") + to_string(which);
      query = [&, which](const std::vector<Nat>& xs) { return fix_pi_members(pf, xs, which); };
      break;
    }
    case StarKind::Seq: {
      const Seq s = *c->control_seq();
      notion = "(u,u) in underline(" + s.to_string() + ")";
      query = [&, s](const std::vector<Nat>& xs) { return fix_s_members(s, pf, xs); };
      break;
    }
  }
  r.facts.emplace_back("fixpoint notion", notion);
  const auto in_window = query(win);
  const auto in_region = query(region);
  std::vector<Nat> outside;
  for (const auto& u : in_window) {
    if (!std::binary_search(region.begin(), region.end(), u)) outside.push_back(u);
  }
  r.body.push_back("members in window: {" + join_nats(in_window) + "}");
  r.body.push_back("candidate region: {" + join_nats(region) + "}");
  r.body.push_back("members in candidate region: {" + join_nats(in_region) + "}");
  r.extra["members_in_window"] = join_nats(in_window);
  r.extra["candidate_region"] = join_nats(region);
  r.extra["members_in_region"] = join_nats(in_region);
  r.extra["expected"] = c->S().size();

  CheckLine count{"candidate count = |S|", "", in_region.size() == c->S().size() ? "pass" : "FAIL",
                  in_region.size(), "expected " + std::to_string(c->S().size())};
  CheckLine confined{"no fixpoints outside candidate region", "", outside.empty() ? "pass" : "FAIL",
                     outside.size(), outside.empty() ? "" : "{" + join_nats(outside) + "}"};
  bool contains_s = std::includes(in_region.begin(), in_region.end(), c->S().begin(), c->S().end());
  CheckLine s_fixed{"S are fixpoints", "", contains_s ? "pass" : "FAIL", c->S().size(), ""};
  r.checks = {s_fixed, count, confined};
  return r;
}

FiniteEnv finite_bindings(const std::string& path, std::size_t n) {
  FiniteEnv env;
  if (path.empty()) return env;
  std::ifstream in(path);
  if (!in) throw Error("bad-file", "cannot open bindings file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error("bad-file", std::string("bindings file is not valid JSON: ") + e.what());
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    FiniteRelation r(n);
    for (const auto& p : it.value()) r.insert(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
    env.insert_or_assign(it.key(), r);
  }
  return env;
}

LazyEnv lazy_bindings(const std::string& path) {
  LazyEnv env;
  if (path.empty()) return env;
  std::ifstream in(path);
  if (!in) throw Error("bad-file", "cannot open bindings file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error("bad-file", std::string("bindings file is not valid JSON: ") + e.what());
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    std::vector<NatPair> pairs;
    for (const auto& p : it.value()) pairs.emplace_back(p.at(0).get<std::uint64_t>(), p.at(1).get<std::uint64_t>());
    env.insert_or_assign(it.key(), LazyRelation::finite(std::move(pairs)));
  }
  return env;
}

std::string window_text(const WindowPairs& w, std::size_t limit = 200) {
  std::string out = "{";
  for (std::size_t i = 0; i < w.size() && i < limit; ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(w[i].first) + "," + std::to_string(w[i].second) + ")";
  }
  if (w.size() > limit) out += ",...";
  return out + "}";
}

bool all_bound(const std::set<std::string>& vars, const std::vector<std::string>& names) {
  for (const auto& v : vars) {
    if (std::find(names.begin(), names.end(), v) == names.end()) return false;
  }
  return true;
}

Report cmd_eval(const Options& o) {
  Report r;
  auto parsed = parse(o.formula);
  r.facts.emplace_back("input", o.formula);
  if (has_star(o)) {
    auto c = construction_from(o);
    describe_star(r, *c);
    const auto pf = as_pairing_function(c);
    const auto lo = lazy_options(o);
    r.facts.emplace_back("window", std::to_string(lo.window));
    auto env = lazy_bindings(o.bind);
    std::vector<std::string> names;
    for (const auto& [k, v] : env) names.push_back(k);
    if (auto* t = std::get_if<TermPtr>(&parsed)) {
      auto w = window(eval_lazy(**t, env, pf), lo.window);
      r.body.push_back("value on window: " + window_text(w));
      r.extra["window_pairs"] = w.size();
      r.checks.push_back({"evaluate", print(**t), "info", w.size(), ""});
      return r;
    }
    const auto& f = *std::get<FormulaPtr>(parsed);
    auto res = check_formula_lazy(f, pf, lo, "formula", env);
    r.checks.push_back({res.name, res.formula, to_string(res.status), res.instances, res.witness});
    return r;
  }
  if (o.model.empty()) throw Error("usage", "eval needs --model, --star or --config");
  const auto m = load_model(o.model);
  describe_model(r, o, m);
  auto env = finite_bindings(o.bind, m.base_size());
  std::vector<std::string> names;
  for (const auto& [k, v] : env) names.push_back(k);
  if (auto* t = std::get_if<TermPtr>(&parsed)) {
    auto value = eval(**t, env, m);
    r.body.push_back("value: " + value.to_string());
    r.extra["value"] = value.to_string();
    r.checks.push_back({"evaluate", print(**t), "info", value.size(), ""});
    return r;
  }
  const auto& f = *std::get<FormulaPtr>(parsed);
  if (all_bound(variables(f), names)) {
    const bool ok = holds(f, env, m);
    r.checks.push_back({"formula", print(f), ok ? "pass" : "FAIL", 1, ""});
    return r;
  }
  const auto st = strategy_from(o);
  r.facts.emplace_back("strategy", st.kind == Strategy::Kind::Exhaustive ? "exhaustive" : "sampled");
  r.checks.push_back(finite_check("formula", f, m, st));
  return r;
}

Report cmd_build(const Options& o) {
  Report r;
  auto c = construction_from(o);
  describe_star(r, *c);
  std::istringstream in(layout_report(*c));
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("construction:", 0) != 0) r.body.push_back(line);
  }
  json fam = json::object();
  for (const auto& f : c->families()) fam[f.label] = join_nats(f.members);
  r.extra["families"] = fam;
  r.extra["layout_report"] = layout_report(*c);
  return r;
}

Report cmd_export(const Options& o, std::ostream& out) {
  if (!o.suite.empty()) {
    for (const auto& line : axiom_suite_text(o.suite)) out << line << "\n";
  } else if (has_star(o)) {
    ConstructionConfig c;
    if (!o.config.empty()) {
      c = load_config(o.config);
    } else {
      c.kind = parse_star_kind(o.star);
      c.S = parse_nat_list(o.S);
      c.control = c.kind == StarKind::Tree ? o.t : o.s;
      build(c);  // validate
    }
    out << config_to_json_text(c) << "\n";
  } else if (!o.model.empty()) {
    out << model_to_json_text(load_model(o.model)) << "\n";
  } else {
    throw Error("usage", "export needs --suite, --model, --star or --config");
  }
  return {};
}

void add_source_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--model", o.model, "finite model: full:<n> or a JSON model file");
  cmd->add_option("--star", o.star, "construction kind: basic, tree, pi, rho, seq");
  cmd->add_option("--S", o.S, "comma-separated fixpoint set, e.g. 1,2");
  cmd->add_option("--t", o.t, "control tree, e.g. \"(bin nil nil)\"");
  cmd->add_option("--s", o.s, "control sequence, e.g. pi.rho");
  cmd->add_option("--config", o.config, "JSON construction config");
}

void add_check_options(CLI::App* cmd, Options& o) {
  cmd->add_flag("--exhaustive", o.exhaustive, "enumerate every assignment (finite models)");
  cmd->add_option("--samples", o.samples, "random assignments instead of exhaustive enumeration");
  cmd->add_option("--seed", o.seed, "seed for all randomness");
  cmd->add_option("--window", o.window, "membership window [0,n)")->capture_default_str();
  cmd->add_option("--bound", o.bound, "urelement search bound (default: window)");
  cmd->add_option("--support-bound", o.support_bound, "random supports inside [0,n)^2")->capture_default_str();
  cmd->add_option("--trials", o.trials, "random finitely supported assignments")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"relfork: relation and fork algebra workbench"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", o.timing, "include wall time (makes output run-dependent)");

  auto* check = app.add_subcommand("check", "run an axiom suite against a model or construction");
  add_source_options(check, o);
  add_check_options(check, o);
  check->add_option("--suite", o.suite, "cr_equational, cr_tarski, cfa or cfau");

  auto* fix = app.add_subcommand("fix", "list controlled fixpoints of a construction");
  add_source_options(fix, o);
  fix->add_option("--window", o.window, "scan window [0,n)")->capture_default_str();

  auto* ev = app.add_subcommand("eval", "evaluate a term or formula");
  ev->add_option("text", o.formula, "term or formula")->required();
  add_source_options(ev, o);
  add_check_options(ev, o);
  ev->add_option("--bind", o.bind, "JSON file mapping variables to pair lists");

  auto* bld = app.add_subcommand("build", "print the layout report of a construction");
  add_source_options(bld, o);

  auto* exp = app.add_subcommand("export", "write a model, construction config or axiom suite");
  add_source_options(exp, o);
  exp->add_option("--suite", o.suite, "axiom suite to print, one formula per line");

  // Allow --format=json anywhere on the line.
  for (auto* sub : {check, fix, ev, bld, exp}) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", o.timing, "include wall time");
  }

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::string command = "relfork";
  for (const auto& a : rest) command += " " + a;
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'relfork --help' for usage\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Report r;
    if (*check) r = cmd_check(o);
    else if (*fix) r = cmd_fix(o);
    else if (*ev) r = cmd_eval(o);
    else if (*bld) r = cmd_build(o);
    else if (*exp) {
      cmd_export(o, out);
      return 0;
    }
    r.command = command;
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(r, o, out, ms);
    return exit_code(r);
  } catch (const Error& e) {
    err << "error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace relfork
