#include "orlicz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "orlicz/fuzz.hpp"
#include "orlicz/io.hpp"
#include "orlicz/multipliers.hpp"
#include "orlicz/norms.hpp"

namespace orlicz::cli {

namespace {

using io::json;

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string fmt(ExtReal x) { return fmt(x.value()); }

json num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

/// JSON output: schema-tagged; doubles print in shortest round-trip form.
void emit(std::ostream& out, const std::string& command, json body) {
  body["schema"] = 1;
  body["command"] = command;
  out << body.dump(2) << '\n';
}

struct Common {
  bool as_json = false;
};

struct TripleArgs {
  std::string phi1, phi2, phi3;

  void add(CLI::App* cmd, bool need_phi3 = true) {
    cmd->add_option("--phi1", phi1, "Φ1 descriptor (inline JSON or file)")->required();
    cmd->add_option("--phi2", phi2, "Φ2 descriptor (inline JSON or file)")->required();
    auto* o = cmd->add_option("--phi3", phi3, "Φ3 descriptor (inline JSON or file)");
    if (need_phi3) o->required();
  }

  Triple load() const {
    return {io::young_from_json(io::load_json_arg(phi1, "phi1"), "phi1"),
            io::young_from_json(io::load_json_arg(phi2, "phi2"), "phi2"),
            io::young_from_json(io::load_json_arg(phi3, "phi3"), "phi3")};
  }
};

struct GridArgs {
  LogGrid grid;

  void add(CLI::App* cmd) {
    cmd->add_option("--u-min", grid.u_min, "Grid lower end")->capture_default_str();
    cmd->add_option("--u-max", grid.u_max, "Grid upper end")->capture_default_str();
    cmd->add_option("--count", grid.count, "Grid points")->capture_default_str();
  }

  LogGrid load() const {
    try {
      grid.validate();
    } catch (const std::invalid_argument& e) {
      throw io::InputError("grid", e.what());
    }
    return grid;
  }
};

YoungFunction load_young(const std::string& arg, const std::string& field) {
  return io::young_from_json(io::load_json_arg(arg, field), field);
}

ExtReal parse_ext(const std::string& s, const std::string& field) {
  if (s == "inf") return ExtReal::infinity();
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return ExtReal(v);
  } catch (const std::exception&) {
    throw io::InputError(field, "expected a nonnegative number or \"inf\"");
  }
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw io::InputError("csv", "cannot write \"" + path + "\"");
  out << header << '\n' << std::setprecision(17);
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << fmt(r[i]);
    out << '\n';
  }
}

// ---- commands ----

int cmd_norm(const Common& c, const std::string& young, const std::string& data, const std::string& kind,
             const std::string& method, std::ostream& out) {
  YoungFunction phi = load_young(young, "young");
  SimpleFunction f = io::load_data_arg(data, "data");
  NormResult r;
  if (kind == "lux")
    r = lux_norm(phi, f);
  else if (method == "closed-form")
    r = weak_norm_closed_form(phi, f);
  else
    r = weak_norm(phi, f);
  if (c.as_json) {
    emit(out, "norm", {{"kind", kind}, {"result", io::to_json(r)}});
  } else {
    out << "kind: " << kind << "\nvalue: " << fmt(r.value) << "\nmethod: " << to_string(r.method)
        << "\nresidual: " << (r.residual ? fmt(*r.residual) : std::string("n/a")) << '\n';
  }
  return kOk;
}

int cmd_inverse(const Common& c, const std::string& young, const std::string& u_arg, bool alt, std::ostream& out) {
  YoungFunction phi = load_young(young, "young");
  ExtReal u = parse_ext(u_arg, "u");
  ExtReal v = alt ? phi.inverse_alt(u) : phi.inverse(u);
  if (c.as_json) {
    emit(out, "inverse",
         {{"u", io::to_json(u)},
          {"value", io::to_json(v)},
          {"variant", alt ? "limit" : "default"},
          {"a", io::to_json(ExtReal(phi.a()))},
          {"b", io::to_json(ExtReal(phi.b()))},
          {"class", to_string(phi.classify())}});
  } else {
    out << "inverse(" << fmt(u) << ") = " << fmt(v) << (alt ? "  (limit variant)" : "") << "\na = " << fmt(phi.a())
        << ", b = " << fmt(phi.b()) << ", class " << to_string(phi.classify()) << '\n';
  }
  return kOk;
}

json constants_json(const TripleConstant& tc) {
  return {{"c_upper", num(tc.c_upper)},
          {"c_lower", num(tc.c_lower)},
          {"argmax_upper", tc.argmax_upper},
          {"argmax_lower", tc.argmax_lower},
          {"upper_bounded", tc.upper_bounded},
          {"lower_bounded", tc.lower_bounded},
          {"grid", io::to_json(tc.grid)}};
}

int cmd_constants(const Common& c, const TripleArgs& ta, const GridArgs& ga, const std::string& csv,
                  std::ostream& out) {
  Triple t = ta.load();
  LogGrid grid = ga.load();
  TripleConstant tc = estimate_constants(t, grid);
  if (!csv.empty()) {
    std::vector<std::vector<double>> rows;
    for (double u : grid.points()) {
      auto up = upper_ratio(t, u), lo = lower_ratio(t, u);
      rows.push_back({u, up.value_or(std::nan("")), lo.value_or(std::nan(""))});
    }
    write_csv(csv, "u,upper_ratio,lower_ratio", rows);
  }
  const bool ok = tc.upper_bounded && tc.lower_bounded;
  if (c.as_json) {
    emit(out, "constants", {{"constants", constants_json(tc)}, {"bounded", ok}});
  } else {
    out << "c_upper: " << fmt(tc.c_upper) << (tc.upper_bounded ? "" : "  (unbounded on grid)")
        << " at u = " << fmt(tc.argmax_upper) << "\nc_lower: " << fmt(tc.c_lower)
        << (tc.lower_bounded ? "" : "  (unbounded on grid)") << " at u = " << fmt(tc.argmax_lower) << "\ngrid: ["
        << fmt(grid.u_min) << ", " << fmt(grid.u_max) << "], " << grid.count << " points\n";
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_holder(const Common& c, const TripleArgs& ta, const GridArgs& ga, const std::string& fa,
               const std::string& ga_data, std::optional<double> cst, std::ostream& out) {
  Triple t = ta.load();
  SimpleFunction f = io::load_data_arg(fa, "f");
  SimpleFunction g = io::load_data_arg(ga_data, "g");
  if (f.size() != g.size()) throw io::InputError("g", "f and g must have the same number of atoms");
  double used;
  json extra = json::object();
  if (cst) {
    used = *cst;
  } else {
    TripleConstant tc = estimate_constants(t, ga.load());
    if (!tc.upper_bounded) throw UnboundedOnGrid("unbounded on grid: upper constant");
    used = std::max(tc.c_upper, required_upper_constant(t, f, g));
    extra["grid_c_upper"] = tc.c_upper;
  }
  HolderReport r = holder_verify(t, f, g, used);
  const bool ok = r.holds && r.pointwise_holds && r.assumption_holds;
  if (c.as_json) {
    extra.update({{"norm_f", r.norm_f},
                  {"norm_g", r.norm_g},
                  {"lhs", r.norm_fg},
                  {"rhs", r.rhs},
                  {"constant", used},
                  {"assumption_holds", r.assumption_holds},
                  {"pointwise_holds", r.pointwise_holds},
                  {"worst_pointwise", num(r.worst_pointwise)},
                  {"holds", ok}});
    emit(out, "holder-check", extra);
  } else {
    out << "||fg|| = " << fmt(r.norm_fg) << "  <=  4 C ||f|| ||g|| = " << fmt(r.rhs) << "   (C = " << fmt(used)
        << ")\nassumption at case levels: " << (r.assumption_holds ? "ok" : "VIOLATED")
        << "\natomwise bound: " << (r.pointwise_holds ? "ok" : "VIOLATED") << "\nresult: " << (ok ? "PASS" : "FAIL")
        << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

json witness_json(const WitnessReport& r) {
  return {{"h", io::to_json(r.h)},
          {"norm_g", r.norm_g},
          {"norm_h", r.norm_h},
          {"norm_hg", r.norm_hg},
          {"constant", r.constant},
          {"delta", r.delta},
          {"lower_bound", r.lower_bound},
          {"slack", num(r.slack)},
          {"norm_h_ok", r.norm_h_ok},
          {"lower_ok", r.lower_ok},
          {"pointwise_p1_ok", r.pointwise_p1_ok},
          {"pointwise_growth_ok", r.pointwise_growth_ok},
          {"pass", r.pass}};
}

int cmd_witness(const Common& c, const TripleArgs& ta, const GridArgs& ga, const std::string& g_arg,
                std::optional<double> cst, double delta, std::ostream& out) {
  Triple t = ta.load();
  SimpleFunction g = io::load_data_arg(g_arg, "g");
  double used;
  if (cst) {
    used = *cst;
  } else {
    TripleConstant tc = estimate_constants(t, ga.load());
    if (!tc.lower_bounded) throw UnboundedOnGrid("unbounded on grid: lower constant");
    used = tc.c_lower;
  }
  const bool y3 = t.phi2.classify() == YoungClass::Y3 || t.phi3.classify() == YoungClass::Y3;
  WitnessReport r = y3 ? witness_y3(t, g, used, delta) : witness(t, g, used);
  if (c.as_json) {
    json body = witness_json(r);
    body["variant"] = y3 ? "y3" : "direct";
    emit(out, "witness-check", body);
  } else {
    out << "witness h: ";
    for (std::size_t k = 0; k < r.h.size(); ++k) out << (k ? ", " : "") << fmt(r.h.value(k));
    out << "\n||h|| = " << fmt(r.norm_h) << " (<= 1: " << (r.norm_h_ok ? "ok" : "VIOLATED") << ")\n||hg|| = "
        << fmt(r.norm_hg) << "  >=  " << (y3 ? "delta ||g|| / C = " : "||g|| / C = ") << fmt(r.lower_bound)
        << "   (C = " << fmt(r.constant) << ")\nresult: " << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  return r.pass ? kOk : kCheckFailed;
}

int cmd_pwm(const Common& c, const TripleArgs& ta, const GridArgs& ga, const std::string& g_arg, std::size_t budget,
            std::uint64_t seed, double delta, std::ostream& out) {
  SimpleFunction g = io::load_data_arg(g_arg, "g");
  if (g.size() > 4) throw io::InputError("g", "at most four atoms");
  if (ta.phi3.empty()) {
    YoungFunction phi1 = load_young(ta.phi1, "phi1"), phi2 = load_young(ta.phi2, "phi2");
    PwmEstimate e = pwm_bruteforce(phi1, phi2, g, budget, {}, seed);
    if (c.as_json) {
      emit(out, "pwm-bound", {{"estimate", e.estimate}, {"evaluations", e.evaluations}, {"best_f", e.best_f}});
    } else {
      out << "multiplier norm estimate (lower): " << fmt(e.estimate) << "\nevaluations: " << e.evaluations << '\n';
    }
    return kOk;
  }
  Triple t = ta.load();
  SandwichReport r = sandwich_audit(t, g, ga.load(), budget, delta);
  if (c.as_json) {
    emit(out, "pwm-bound",
         {{"estimate", r.estimate},
          {"lower_bound", r.lower_bound},
          {"upper_bound", r.upper_bound},
          {"norm_g", r.norm_g},
          {"constants", constants_json(r.constants)},
          {"c_lower_used", r.c_lower_used},
          {"lower_ok", r.lower_ok},
          {"upper_ok", r.upper_ok},
          {"pass", r.pass}});
  } else {
    out << "sandwich: " << fmt(r.lower_bound) << "  <=  " << fmt(r.estimate) << "  <=  " << fmt(r.upper_bound)
        << "\nresult: " << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  return r.pass ? kOk : kCheckFailed;
}

int cmd_equiv(const Common& c, const std::string& young, const std::string& data, double lambda, std::ostream& out) {
  YoungFunction phi = load_young(young, "young");
  SimpleFunction f = io::load_data_arg(data, "data");
  if (!(lambda > 0.0 && std::isfinite(lambda))) throw io::InputError("lambda", "must be finite and > 0");
  const ExtReal s1 = weak_sup_form1(phi, f, lambda), s2 = weak_sup_form2(phi, f, lambda),
                s3 = weak_sup_form3(phi, f, lambda);
  const bool same_inf = s1.is_inf() == s2.is_inf() && s2.is_inf() == s3.is_inf();
  const bool same_zero = s1.is_zero() == s2.is_zero() && s2.is_zero() == s3.is_zero();
  double disc = 0.0;
  if (!same_inf || !same_zero) {
    disc = kInf;
  } else if (!s1.is_inf()) {
    const double v[] = {s1.value(), s2.value(), s3.value()};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (v[i] != v[j]) disc = std::max(disc, std::abs(v[i] - v[j]) / std::max(v[i], v[j]));
  }
  const bool ok = disc <= 1e-9;
  if (c.as_json) {
    emit(out, "equiv-check",
         {{"form1", io::to_json(s1)},
          {"form2", io::to_json(s2)},
          {"form3", io::to_json(s3)},
          {"discrepancy", num(disc)},
          {"agree", ok}});
  } else {
    out << "sup_t Phi(t) mu(f,t)           = " << fmt(s1) << "\nsup_u u mu(f, Phi^-1(u))       = " << fmt(s2)
        << "\nsup_u u mu(Phi(|f|), u)        = " << fmt(s3) << "\nmax relative discrepancy: " << fmt(disc) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_examples(const Common& c, const std::string& family, double p, std::optional<double> q, double u_min,
                 double u_max, int count, const std::string& csv, std::ostream& out) {
  std::vector<std::pair<std::string, YoungFunction>> cases;
  auto label = [](const std::string& fam, double pp, std::optional<double> qq) {
    std::ostringstream s;
    s << fam << "(" << pp;
    if (qq) s << "," << *qq;
    s << ")";
    return s.str();
  };
  if (family.empty()) {
    for (int pp = 1; pp <= 3; ++pp)
      for (int qq = 1; qq <= 3; ++qq) cases.emplace_back(label("powerlog", pp, qq), YoungFunction::power_log(pp, qq));
    for (int pp = 1; pp <= 3; ++pp) cases.emplace_back(label("exppower", pp, {}), YoungFunction::exp_power(pp));
  } else if (family == "power") {
    cases.emplace_back(label(family, p, {}), YoungFunction::power(p));
  } else if (family == "powerlog") {
    if (!q) throw io::InputError("q", "required for powerlog");
    cases.emplace_back(label(family, p, q), YoungFunction::power_log(p, *q));
  } else if (family == "exppower") {
    cases.emplace_back(label(family, p, {}), YoungFunction::exp_power(p));
  } else {
    throw io::InputError("family", "expected power, powerlog, or exppower");
  }

  bool all = true;
  json rows = json::array();
  std::vector<std::vector<double>> csv_rows;
  if (!c.as_json) out << std::left << std::setw(16) << "function" << std::setw(16) << "K" << std::setw(16)
                      << "K extended" << "change   result\n";
  for (std::size_t i = 0; i < cases.size(); ++i) {
    AsymptoticsReport r = example_asymptotics_audit(cases[i].second, u_min, u_max, count);
    all = all && r.pass;
    for (const auto& [u, ratio] : r.table) csv_rows.push_back({static_cast<double>(i), u, ratio});
    if (c.as_json) {
      rows.push_back({{"function", cases[i].first},
                      {"k", r.k},
                      {"k_extended", r.k_extended},
                      {"relative_change", r.relative_change},
                      {"finite", r.finite},
                      {"stable", r.stable},
                      {"pass", r.pass}});
    } else {
      out << std::left << std::setw(16) << cases[i].first << std::setw(16) << fmt(r.k) << std::setw(16)
          << fmt(r.k_extended) << std::setw(9) << fmt(r.relative_change) << (r.pass ? "PASS" : "FAIL") << '\n';
    }
  }
  if (!csv.empty()) write_csv(csv, "case,u,ratio", csv_rows);
  if (c.as_json) emit(out, "examples", {{"results", rows}, {"pass", all}});
  return all ? kOk : kCheckFailed;
}

int cmd_fuzz(const Common& c, const std::string& config_arg, std::optional<std::uint64_t> seed,
             std::optional<std::int64_t> cases, std::optional<std::string> checks, const std::string& out_path,
             const std::string& corpus, bool serial, bool timing, std::ostream& out) {
  fuzz::CampaignConfig cfg;
  if (!config_arg.empty()) cfg = fuzz::config_from_json(io::load_json_arg(config_arg, "config"));
  if (seed) cfg.seed = *seed;
  if (cases) cfg.cases = *cases;
  if (checks) {
    cfg.checks.clear();
    std::stringstream ss(*checks);
    std::string name;
    while (std::getline(ss, name, ',')) {
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      if (name.empty()) continue;
      try {
        cfg.checks.push_back(fuzz::check_from_string(name));
      } catch (const std::invalid_argument& e) {
        throw io::InputError("checks", e.what());
      }
    }
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw io::InputError("config", e.what());
  }

  fuzz::CampaignReport rep = serial ? fuzz::run_campaign_serial(cfg) : fuzz::run_campaign(cfg);
  if (!out_path.empty()) fuzz::write_report(rep, out_path, corpus, timing);

  if (c.as_json) {
    json j = fuzz::to_json(rep, timing);
    j["command"] = "fuzz";
    out << j.dump(2) << '\n';
  } else {
    out << std::left << std::setw(20) << "check" << std::setw(8) << "cases" << std::setw(8) << "pass" << std::setw(8)
        << "fail" << "worst slack\n";
    for (const auto& [name, s] : rep.checks)
      out << std::left << std::setw(20) << name << std::setw(8) << s.cases << std::setw(8) << s.pass << std::setw(8)
          << s.fail << fmt(s.worst_slack) << '\n';
    out << "counterexamples: " << rep.counterexamples.size() << "\nrng: " << fuzz::kRngAlgorithm
        << "  seed: " << cfg.seed << "\nwall time: " << fmt(rep.wall_seconds) << " s\n";
  }
  return rep.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak Orlicz space toolkit: norms, multiplier constants, and seeded property campaigns",
               args.empty() ? "orlicz_kit" : args.front()};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.as_json, "Machine-readable output (schema 1)");

  std::string young, data, kind = "weak", method = "bisection", u_arg, g_arg, f_arg, config_arg, out_path, corpus,
                      csv, family;
  bool alt = false, serial = false, timing = false;
  double delta = 0.9, lambda = 1.0, p = 2.0, u_min = 1e-6, u_max = 1e12;
  int count = 2001;
  std::optional<double> cst, q;
  std::size_t budget = 400;
  std::uint64_t pwm_seed = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> cases;
  std::optional<std::string> checks;
  TripleArgs ta;
  GridArgs grid;

  auto* norm = app.add_subcommand("norm", "Weak or Luxemburg norm of a simple function");
  norm->add_option("--young", young, "Young function (inline JSON or file)")->required();
  norm->add_option("--data", data, "Simple function (inline JSON, .json, or .csv)")->required();
  norm->add_option("--kind", kind, "weak | lux")->check(CLI::IsMember({"weak", "lux"}))->capture_default_str();
  norm->add_option("--method", method, "Weak norm route: bisection | closed-form")
      ->check(CLI::IsMember({"bisection", "closed-form"}))
      ->capture_default_str();

  auto* inv = app.add_subcommand("inverse", "Generalized inverse inf{t : Φ(t) > u}");
  inv->add_option("--young", young, "Young function (inline JSON or file)")->required();
  inv->add_option("--u", u_arg, "Level u >= 0, or inf")->required();
  inv->add_flag("--alt", alt, "Use the limit variant at u = inf");

  auto* constants = app.add_subcommand("constants", "Grid estimate of the inverse-product constants");
  ta.add(constants);
  grid.add(constants);
  constants->add_option("--csv", csv, "Write (u, upper_ratio, lower_ratio) rows to this file");

  auto* holder = app.add_subcommand("holder-check", "Verify ||fg|| <= 4C ||f|| ||g||");
  ta.add(holder);
  grid.add(holder);
  holder->add_option("--f", f_arg, "f (inline JSON, .json, or .csv)")->required();
  holder->add_option("--g", g_arg, "g on the same atoms")->required();
  holder->add_option("--c", cst, "Constant C (default: grid estimate, raised to the case levels)");

  auto* wit = app.add_subcommand("witness-check", "Build the extremal h and check the multiplier lower bound");
  ta.add(wit);
  grid.add(wit);
  wit->add_option("--g", g_arg, "Multiplier g (inline JSON, .json, or .csv)")->required();
  wit->add_option("--c", cst, "Constant C (default: grid estimate)");
  wit->add_option("--delta", delta, "Envelope parameter when Φ2 or Φ3 is bounded with finite Φ(b)")
      ->capture_default_str();

  auto* pwm = app.add_subcommand("pwm-bound", "Brute-force lower estimate of the multiplier norm (<= 4 atoms)");
  ta.add(pwm, false);
  grid.add(pwm);
  pwm->add_option("--g", g_arg, "Multiplier g")->required();
  pwm->add_option("--budget", budget, "Norm-ratio evaluations")->capture_default_str();
  pwm->add_option("--seed", pwm_seed, "Search seed")->capture_default_str();
  pwm->add_option("--delta", delta, "Envelope parameter for the sandwich lower bound")->capture_default_str();
  pwm->footer("With --phi3 the estimate is checked against both sandwich bounds.");

  auto* equiv = app.add_subcommand("equiv-check", "Compare the three supremum forms of the weak functional");
  equiv->add_option("--young", young, "Young function")->required();
  equiv->add_option("--data", data, "Simple function")->required();
  equiv->add_option("--lambda", lambda, "Evaluate at f / lambda")->capture_default_str();

  auto* ex = app.add_subcommand("examples", "Inverse-vs-surrogate ratio bounds for the power-log and exp families");
  ex->add_option("--family", family, "power | powerlog | exppower (default: the full (p, q) table)");
  ex->add_option("--p", p, "Exponent p")->capture_default_str();
  ex->add_option("--q", q, "Log exponent q (powerlog)");
  ex->add_option("--u-min", u_min, "Range lower end")->capture_default_str();
  ex->add_option("--u-max", u_max, "Range upper end")->capture_default_str();
  ex->add_option("--count", count, "Grid points")->capture_default_str();
  ex->add_option("--csv", csv, "Write (case, u, ratio) rows to this file");

  auto* fz = app.add_subcommand("fuzz", "Seeded property campaign");
  fz->add_option("--config", config_arg, "Campaign config (inline JSON or file)");
  fz->add_option("--seed", seed, "Campaign seed");
  fz->add_option("--cases", cases, "Cases per check");
  fz->add_option("--checks", checks, "Comma-separated check names");
  fz->add_option("--out", out_path, "Write the report JSON here");
  fz->add_option("--corpus", corpus, "Write counterexample records into this directory");
  fz->add_flag("--serial", serial, "Use the serial reference runner");
  fz->add_flag("--timing", timing, "Include wall time in the report JSON");

  // CLI11 consumes a vector of arguments in reverse order, without the program name.
  std::vector<std::string> rev;
  if (args.size() > 1) rev.assign(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*norm) return cmd_norm(common, young, data, kind, method, out);
    if (*inv) return cmd_inverse(common, young, u_arg, alt, out);
    if (*constants) return cmd_constants(common, ta, grid, csv, out);
    if (*holder) return cmd_holder(common, ta, grid, f_arg, g_arg, cst, out);
    if (*wit) return cmd_witness(common, ta, grid, g_arg, cst, delta, out);
    if (*pwm) return cmd_pwm(common, ta, grid, g_arg, budget, pwm_seed, delta, out);
    if (*equiv) return cmd_equiv(common, young, data, lambda, out);
    if (*ex) return cmd_examples(common, family, p, q, u_min, u_max, count, csv, out);
    if (*fz) return cmd_fuzz(common, config_arg, seed, cases, checks, out_path, corpus, serial, timing, out);
  } catch (const UnboundedOnGrid& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace orlicz::cli
