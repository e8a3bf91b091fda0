#include "orlicz/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <omp.h>

#include "orlicz/io.hpp"
#include "orlicz/norms.hpp"

namespace orlicz::fuzz {

namespace {

constexpr int kFatouStages = 8;

json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

/// rhs (1 + tol) / lhs - 1: nonnegative exactly when lhs <= rhs (1 + tol).
double margin(double lhs, double rhs, double tol) {
  if (lhs == 0.0) return kInf;
  if (lhs == kInf) return rhs == kInf ? 0.0 : -kInf;
  return rhs * (1.0 + tol) / lhs - 1.0;
}

double rel_diff(double x, double y) {
  if (x == y) return 0.0;
  return std::abs(x - y) / std::max(std::abs(x), std::abs(y));
}

/// Multiple of 2^-20 nearest x: keeps breakpoint arithmetic exact.
double snap(double x) { return std::ldexp(std::round(std::ldexp(x, 20)), -20); }

/// Segment length m / 16 with m in [1, 64].
double dyadic_length(CounterRng& rng) { return rng.range(1, 64) / 16.0; }

std::array<double, 3> bounded_mix(const std::array<double, 3>& mix) {
  double s = mix[1] + mix[2];
  if (s <= 0.0) return {0.0, 0.5, 0.5};
  return {0.0, mix[1] / s, mix[2] / s};
}

std::array<double, 3> finite_value_mix(const std::array<double, 3>& mix) {
  double s = mix[0] + mix[1];
  if (s <= 0.0) return {0.5, 0.5, 0.0};
  return {mix[0] / s, mix[1] / s, 0.0};
}

double weak(const YoungFunction& phi, const SimpleFunction& f, bool reverify) {
  return (reverify ? weak_norm_closed_form(phi, f) : weak_norm(phi, f)).value.value();
}

double lux(const YoungFunction& phi, const SimpleFunction& f) { return lux_norm(phi, f).value.value(); }

SimpleFunction add(const SimpleFunction& f, const SimpleFunction& g) {
  std::vector<double> v(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) v[k] = f.value(k) + g.value(k);
  return f.with_values(std::move(v));
}

std::string class_tag(YoungClass c) {
  std::string s = to_string(c);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

bool involves_y3(const Triple& t) {
  return t.phi1.classify() == YoungClass::Y3 || t.phi2.classify() == YoungClass::Y3 ||
         t.phi3.classify() == YoungClass::Y3;
}

json triple_json(const Triple& t) {
  return {{"phi1", io::to_json(t.phi1)}, {"phi2", io::to_json(t.phi2)}, {"phi3", io::to_json(t.phi3)}};
}

struct Case {
  const CampaignConfig& cfg;
  Check check;
  std::int64_t index;
  bool reverify;
  std::uint64_t sub_seed;
  CounterRng rng;
  CaseOutcome out;
  json inputs = json::object();
  json sides = json::object();

  Case(const CampaignConfig& c, Check k, std::int64_t i, bool rv)
      : cfg(c), check(k), index(i), reverify(rv),
        sub_seed(derive_seed(c.seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(k))),
        rng(sub_seed) {}

  int atoms() { return rng.range(1, cfg.max_atoms); }

  YoungFunction young(const std::array<double, 3>& mix) {
    YoungFunction phi = gen_young(rng, cfg, gen_class(rng, mix));
    out.tags.push_back(class_tag(phi.classify()));
    return phi;
  }

  void boundary_tag(const YoungFunction& phi, const SimpleFunction& f) {
    if (phi.b() < kInf && f.max_value() >= phi.b()) out.tags.push_back("boundary");
  }

  void verdict(bool pass, double slack) {
    out.pass = pass;
    out.slack = slack;
  }
};

void check_holder(Case& c) {
  GeneratedTriple gt = gen_triple(c.rng, c.cfg);
  const Triple& t = gt.triple;
  MeasureSpace space = gen_space(c.rng, c.atoms());
  SimpleFunction f = gen_simple(c.rng, space, t.phi1.b());
  SimpleFunction g = gen_simple(c.rng, space, t.phi3.b());
  c.out.tags.push_back(to_string(gt.mode));
  if (involves_y3(t)) c.out.tags.push_back("y3");
  c.inputs = {{"triple", triple_json(t)}, {"f", io::to_json(f)}, {"g", io::to_json(g)}};

  TripleConstant tc = estimate_constants(t, c.cfg.u_grid);
  if (!tc.upper_bounded) {
    c.out.tags.push_back("unbounded-grid");
    c.verdict(false, -kInf);
    return;
  }
  const NormMethod route = c.reverify ? NormMethod::ClosedForm : NormMethod::PredicateBisection;
  const double need = required_upper_constant(t, f, g, route);
  if (need > tc.c_upper) c.out.tags.push_back("case-raised");
  const double cst = std::max(tc.c_upper, need);
  HolderReport r = holder_verify(t, f, g, cst, route);
  c.sides = {{"lhs", num(r.norm_fg)},       {"rhs", num(r.rhs)},           {"constant", num(cst)},
             {"grid_c_upper", num(tc.c_upper)}, {"norm_f", num(r.norm_f)}, {"norm_g", num(r.norm_g)},
             {"pointwise_holds", r.pointwise_holds}, {"worst_pointwise", num(r.worst_pointwise)}};
  c.verdict(r.holds && r.pointwise_holds && r.assumption_holds, margin(r.norm_fg, r.rhs, 1e-9));
}

void check_witness(Case& c) {
  GeneratedTriple gt = gen_triple(c.rng, c.cfg);
  const Triple& t = gt.triple;
  MeasureSpace space = gen_space(c.rng, c.atoms());
  SimpleFunction g = gen_simple(c.rng, space, t.phi3.b());
  c.out.tags.push_back(to_string(gt.mode));
  c.inputs = {{"triple", triple_json(t)}, {"g", io::to_json(g)}};

  TripleConstant tc = estimate_constants(t, c.cfg.u_grid);
  if (!tc.lower_bounded) {
    c.out.tags.push_back("unbounded-grid");
    c.verdict(false, -kInf);
    return;
  }
  const NormMethod route = c.reverify ? NormMethod::ClosedForm : NormMethod::PredicateBisection;
  const bool y3 = t.phi2.classify() == YoungClass::Y3 || t.phi3.classify() == YoungClass::Y3;
  if (y3) c.out.tags.push_back("y3");
  WitnessReport r = y3 ? witness_y3(t, g, tc.c_lower, c.cfg.delta, route) : witness(t, g, tc.c_lower, route);
  if (r.constant > tc.c_lower) c.out.tags.push_back("case-raised");
  c.sides = {{"norm_hg", num(r.norm_hg)},   {"lower_bound", num(r.lower_bound)}, {"norm_h", num(r.norm_h)},
             {"norm_g", num(r.norm_g)},     {"constant", num(r.constant)},       {"delta", r.delta},
             {"h", io::to_json(r.h)},       {"pointwise_p1_ok", r.pointwise_p1_ok},
             {"pointwise_growth_ok", r.pointwise_growth_ok}};
  double slack = std::min(margin(r.lower_bound * (1.0 - 1e-6), r.norm_hg, 0.0), margin(r.norm_h, 1.0, 1e-9));
  c.verdict(r.pass, slack);
}

void check_sandwich(Case& c) {
  GeneratedTriple gt = gen_triple(c.rng, c.cfg);
  const Triple& t = gt.triple;
  const int hi = std::min(4, c.cfg.max_atoms);
  MeasureSpace space = gen_space(c.rng, c.rng.range(std::min(2, hi), hi));
  SimpleFunction g = gen_simple(c.rng, space, t.phi3.b());
  c.out.tags.push_back(to_string(gt.mode));
  if (involves_y3(t)) c.out.tags.push_back("y3");
  c.inputs = {{"triple", triple_json(t)}, {"g", io::to_json(g)}, {"budget", c.cfg.sandwich_budget}};

  const NormMethod route = c.reverify ? NormMethod::ClosedForm : NormMethod::PredicateBisection;
  try {
    SandwichReport r = sandwich_audit(t, g, c.cfg.u_grid, c.cfg.sandwich_budget, c.cfg.delta, route);
    c.sides = {{"estimate", num(r.estimate)},       {"lower_bound", num(r.lower_bound)},
               {"upper_bound", num(r.upper_bound)}, {"norm_g", num(r.norm_g)},
               {"c_upper", num(r.constants.c_upper)}, {"c_lower_used", num(r.c_lower_used)}};
    double slack = std::min(margin(r.lower_bound * (1.0 - 1e-6), r.estimate, 0.0),
                            margin(r.estimate, r.upper_bound, 1e-6));
    c.verdict(r.pass, slack);
  } catch (const UnboundedOnGrid& e) {
    c.out.tags.push_back("unbounded-grid");
    c.sides = {{"error", e.what()}};
    c.verdict(false, -kInf);
  }
}

void check_equivalence(Case& c) {
  YoungFunction phi = c.young(c.cfg.class_mix);
  SimpleFunction f = gen_simple(c.rng, gen_space(c.rng, c.atoms()), phi.b());
  c.boundary_tag(phi, f);
  c.inputs = {{"young", io::to_json(phi)}, {"f", io::to_json(f)}};
  const ExtReal s1 = weak_sup_form1(phi, f), s2 = weak_sup_form2(phi, f), s3 = weak_sup_form3(phi, f);
  c.sides = {{"form1", io::to_json(s1)}, {"form2", io::to_json(s2)}, {"form3", io::to_json(s3)}};
  const bool inf_agree = s1.is_inf() == s2.is_inf() && s2.is_inf() == s3.is_inf();
  const bool zero_agree = s1.is_zero() == s2.is_zero() && s2.is_zero() == s3.is_zero();
  if (!inf_agree || !zero_agree) {
    c.verdict(false, -kInf);
    return;
  }
  if (s1.is_inf()) {
    c.out.tags.push_back("infinite");
    c.verdict(true, 1e-9);
    return;
  }
  double disc = std::max({rel_diff(s1.value(), s2.value()), rel_diff(s2.value(), s3.value()),
                          rel_diff(s1.value(), s3.value())});
  c.sides["discrepancy"] = disc;
  c.verdict(disc <= 1e-9, 1e-9 - disc);
}

void check_lattice(Case& c) {
  YoungFunction phi = c.young(c.cfg.class_mix);
  SimpleFunction f = gen_simple(c.rng, gen_space(c.rng, c.atoms()), phi.b());
  auto [h, ff] = lattice_pairs(f, c.rng.next_u64());
  c.inputs = {{"young", io::to_json(phi)}, {"f", io::to_json(f)}, {"h", io::to_json(h)}};
  const double wh = weak(phi, h, c.reverify), wf = weak(phi, f, c.reverify);
  const double lh = lux(phi, h), lf = lux(phi, f);
  c.sides = {{"weak_h", num(wh)}, {"weak_f", num(wf)}, {"lux_h", num(lh)}, {"lux_f", num(lf)}};
  double slack = std::min(margin(wh, wf, 1e-12), margin(lh, lf, 1e-12));
  c.verdict(slack >= 0.0, slack);
}

void check_fatou(Case& c) {
  YoungFunction phi = c.young(c.cfg.class_mix);
  SimpleFunction f = gen_simple(c.rng, gen_space(c.rng, c.atoms()), phi.b());
  c.boundary_tag(phi, f);
  c.inputs = {{"young", io::to_json(phi)}, {"f", io::to_json(f)}, {"stages", kFatouStages}};
  FatouReport r = fatou_audit(phi, f, kFatouStages);
  double sup = *std::max_element(r.stage_norms.begin(), r.stage_norms.end());
  json stages = json::array();
  for (double x : r.stage_norms) stages.push_back(num(x));
  c.sides = {{"stage_norms", stages}, {"limit_norm", num(r.limit_norm)}, {"monotone", r.monotone}};
  c.verdict(r.pass, r.monotone ? margin(r.limit_norm, sup, 1e-9) : -kInf);
}

void check_quasi_triangle(Case& c) {
  YoungFunction phi = c.young(c.cfg.class_mix);
  MeasureSpace space = gen_space(c.rng, c.atoms());
  SimpleFunction f = gen_simple(c.rng, space, phi.b());
  SimpleFunction g = gen_simple(c.rng, space, phi.b());
  c.inputs = {{"young", io::to_json(phi)}, {"f", io::to_json(f)}, {"g", io::to_json(g)}};
  const double ws = weak(phi, add(f, g), c.reverify);
  const double rhs = 2.0 * (weak(phi, f, c.reverify) + weak(phi, g, c.reverify));
  c.sides = {{"lhs", num(ws)}, {"rhs", num(rhs)}};
  double slack = margin(ws, rhs, 1e-9);
  c.verdict(slack >= 0.0, slack);
}

void check_lux_triangle(Case& c) {
  YoungFunction phi = c.young(c.cfg.class_mix);
  MeasureSpace space = gen_space(c.rng, c.atoms());
  SimpleFunction f = gen_simple(c.rng, space, phi.b());
  SimpleFunction g = gen_simple(c.rng, space, phi.b());
  c.inputs = {{"young", io::to_json(phi)}, {"f", io::to_json(f)}, {"g", io::to_json(g)}};
  const double ls = lux(phi, add(f, g));
  const double rhs = lux(phi, f) + lux(phi, g);
  c.sides = {{"lhs", num(ls)}, {"rhs", num(rhs)}};
  double slack = margin(ls, rhs, 1e-9);
  c.verdict(slack >= 0.0, slack);
}

void check_homogeneity(Case& c) {
  YoungFunction phi = c.young(c.cfg.class_mix);
  SimpleFunction f = gen_simple(c.rng, gen_space(c.rng, c.atoms()), phi.b());
  const double s = c.rng.log_uniform(1.0 / 64, 64.0);
  c.inputs = {{"young", io::to_json(phi)}, {"f", io::to_json(f)}, {"scale", s}};
  const SimpleFunction sf = f.scaled(s);
  const double w = weak(phi, f, c.reverify), ws = weak(phi, sf, c.reverify);
  const double l = lux(phi, f), ls = lux(phi, sf);
  double disc = std::max(rel_diff(ws, s * w), rel_diff(ls, s * l));
  c.sides = {{"weak", num(w)}, {"weak_scaled", num(ws)}, {"lux", num(l)}, {"lux_scaled", num(ls)},
             {"discrepancy", disc}};
  c.verdict(disc <= 1e-12, 1e-12 - disc);
}

void check_normalization(Case& c) {
  YoungFunction phi = c.young(finite_value_mix(c.cfg.class_mix));
  SimpleFunction f = gen_simple(c.rng, gen_space(c.rng, c.atoms()), phi.b());
  c.boundary_tag(phi, f);
  c.inputs = {{"young", io::to_json(phi)}, {"f", io::to_json(f)}};
  double residual;
  if (c.reverify) {
    const double lambda = weak_norm_closed_form(phi, f).value.value();
    residual = std::abs(weak_functional(phi, canonicalize(f), lambda) - 1.0);
  } else {
    residual = normalization_audit(phi, f);
  }
  c.sides = {{"residual", num(residual)}};
  c.verdict(residual <= 1e-9, 1e-9 - residual);
}

void check_embedding(Case& c) {
  YoungFunction phi = c.young(c.cfg.class_mix);
  SimpleFunction f = gen_simple(c.rng, gen_space(c.rng, c.atoms()), phi.b());
  c.boundary_tag(phi, f);
  c.inputs = {{"young", io::to_json(phi)}, {"f", io::to_json(f)}};
  EmbeddingReport r = embedding_audit(phi, f);
  c.sides = {{"weak", num(r.weak)}, {"lux", num(r.lux)}, {"sup", num(r.sup_norm)}, {"b", num(r.b)}};
  double slack = margin(r.weak, r.lux, 1e-9);
  if (r.b < kInf) slack = std::min(slack, margin(r.sup_norm, r.b * r.weak, 1e-9));
  c.verdict(r.pass, slack);
}

void check_monotone_limit(Case& c) {
  SimpleFunction f = gen_simple(c.rng, gen_space(c.rng, c.atoms()));
  c.inputs = {{"f", io::to_json(f)}, {"stages", kFatouStages}};
  MonotoneLimitReport r = monotone_limit_audit(f, kFatouStages);
  c.sides = {{"levels", r.levels}, {"limits", r.limits}};
  c.verdict(r.pass, r.pass ? 0.0 : -kInf);
}

CaseOutcome evaluate(const CampaignConfig& cfg, Check check, std::int64_t i) {
  CaseOutcome first = run_case(cfg, check, i, false);
  if (first.pass) return first;
  CaseOutcome second = run_case(cfg, check, i, true);
  if (second.pass) {
    second.tags.push_back("reverified");
    return second;
  }
  return first;
}

int thread_cap() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("ORLICZ_KIT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = static_cast<int>(std::min<long>(v, n));
  }
  return std::max(1, n);
}

CampaignReport aggregate(const CampaignConfig& cfg, const std::vector<std::vector<CaseOutcome>>& results) {
  CampaignReport rep;
  rep.config = cfg;
  for (std::size_t k = 0; k < cfg.checks.size(); ++k) rep.checks[to_string(cfg.checks[k])];
  for (const auto& row : results) {
    for (std::size_t k = 0; k < cfg.checks.size(); ++k) {
      const CaseOutcome& o = row[k];
      CheckSummary& s = rep.checks[to_string(cfg.checks[k])];
      ++s.cases;
      (o.pass ? s.pass : s.fail) += 1;
      s.worst_slack = std::min(s.worst_slack, o.slack);
      for (const auto& t : o.tags) ++s.tags[t];
      if (o.record) rep.counterexamples.push_back(*o.record);
    }
  }
  return rep;
}

template <class Loop>
CampaignReport run_with(const CampaignConfig& cfg, Loop&& loop) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<CaseOutcome>> results(static_cast<std::size_t>(cfg.cases),
                                                std::vector<CaseOutcome>(cfg.checks.size()));
  loop(results);
  CampaignReport rep = aggregate(cfg, results);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

void run_row(const CampaignConfig& cfg, std::int64_t i, std::vector<CaseOutcome>& row) {
  for (std::size_t k = 0; k < cfg.checks.size(); ++k) row[k] = evaluate(cfg, cfg.checks[k], i);
}

}  // namespace

std::string to_string(Check c) {
  switch (c) {
    case Check::Holder: return "holder";
    case Check::Witness: return "witness";
    case Check::Sandwich: return "sandwich";
    case Check::NormsEquivalence: return "norms-equivalence";
    case Check::Lattice: return "lattice";
    case Check::Fatou: return "fatou";
    case Check::QuasiTriangle: return "quasi-triangle";
    case Check::Normalization: return "normalization";
    case Check::Embedding: return "embedding";
    case Check::Homogeneity: return "homogeneity";
    case Check::LuxTriangle: return "lux-triangle";
    case Check::MonotoneLimit: return "monotone-limit";
  }
  return "?";
}

Check check_from_string(const std::string& name) {
  for (Check c : kAllChecks)
    if (to_string(c) == name) return c;
  throw std::invalid_argument("unknown check \"" + name + "\"");
}

std::string to_string(TripleMode m) {
  switch (m) {
    case TripleMode::Power: return "power";
    case TripleMode::PowerLog: return "powerlog";
    case TripleMode::ExpPower: return "exppower";
    case TripleMode::Scaled: return "scaled";
    case TripleMode::ScaledSymmetric: return "scaled-symmetric";
  }
  return "?";
}

void CampaignConfig::validate() const {
  if (checks.empty()) throw std::invalid_argument("no checks selected");
  if (cases < 1) throw std::invalid_argument("cases must be >= 1");
  if (max_atoms < 1) throw std::invalid_argument("max_atoms must be >= 1");
  if (max_segments < 1) throw std::invalid_argument("max_segments must be >= 1");
  double total = 0.0;
  for (double p : class_mix) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("class_mix entries must lie in [0, 1]");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("class_mix must sum to 1");
  if (sandwich_budget < 1) throw std::invalid_argument("sandwich_budget must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  u_grid.validate();
}

json to_json(const CampaignConfig& c) {
  json checks = json::array();
  for (Check k : c.checks) checks.push_back(to_string(k));
  return {{"seed", c.seed},
          {"cases", c.cases},
          {"max_atoms", c.max_atoms},
          {"max_segments", c.max_segments},
          {"class_mix", c.class_mix},
          {"u_grid", io::to_json(c.u_grid)},
          {"checks", checks},
          {"sandwich_budget", c.sandwich_budget},
          {"delta", c.delta}};
}

CampaignConfig config_from_json(const json& j) {
  using io::InputError;
  if (!j.is_object()) throw InputError("config", "expected an object");
  CampaignConfig c;
  auto integer = [&](const char* key, auto& dst) {
    if (!j.contains(key)) return;
    const json& v = j[key];
    if (!v.is_number_integer()) throw InputError(std::string("config.") + key, "expected an integer");
    dst = v.get<std::decay_t<decltype(dst)>>();
  };
  integer("seed", c.seed);
  integer("cases", c.cases);
  integer("max_atoms", c.max_atoms);
  integer("max_segments", c.max_segments);
  integer("sandwich_budget", c.sandwich_budget);
  if (j.contains("delta")) {
    if (!j["delta"].is_number()) throw InputError("config.delta", "expected a number");
    c.delta = j["delta"].get<double>();
  }
  if (j.contains("class_mix")) {
    const json& m = j["class_mix"];
    if (!m.is_array() || m.size() != 3) throw InputError("config.class_mix", "expected [p_Y1, p_Y2, p_Y3]");
    for (std::size_t i = 0; i < 3; ++i) {
      if (!m[i].is_number()) throw InputError("config.class_mix", "expected numbers");
      c.class_mix[i] = m[i].get<double>();
    }
  }
  if (j.contains("u_grid")) c.u_grid = io::grid_from_json(j["u_grid"], "config.u_grid");
  if (j.contains("checks")) {
    const json& ch = j["checks"];
    if (!ch.is_array()) throw InputError("config.checks", "expected an array of names");
    c.checks.clear();
    for (const auto& n : ch) {
      if (!n.is_string()) throw InputError("config.checks", "expected check names");
      try {
        c.checks.push_back(check_from_string(n.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw InputError("config.checks", e.what());
      }
    }
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError("config", e.what());
  }
  return c;
}

YoungClass gen_class(CounterRng& rng, const std::array<double, 3>& mix) {
  const double u = rng.uniform01();
  if (u < mix[0]) return YoungClass::Y1;
  if (u < mix[0] + mix[1] || mix[2] == 0.0) return YoungClass::Y2;
  return YoungClass::Y3;
}

YoungFunction gen_young(CounterRng& rng, const CampaignConfig& cfg, YoungClass cls, bool force_flat) {
  const int k = rng.range(1, cfg.max_segments);
  std::vector<double> slopes(static_cast<std::size_t>(k));
  for (double& s : slopes) s = snap(rng.log_uniform(0x1p-8, 0x1p8));
  std::sort(slopes.begin(), slopes.end());

  if (cls == YoungClass::Y3 && rng.bernoulli(0.1)) {
    // Indicator-like member with a = b.
    return YoungFunction::piecewise_linear({{0.0, 0.0}}, BoundedTail{dyadic_length(rng), ExtReal(0.0), {}});
  }

  std::vector<Breakpoint> bp{{0.0, 0.0}};
  double t = 0.0, y = 0.0;
  if (force_flat || rng.bernoulli(0.5)) {
    t = dyadic_length(rng);
    bp.push_back({t, 0.0});
  }
  // k - 1 explicit segments; the last slope belongs to the tail.
  for (int i = 0; i + 1 < k; ++i) {
    double len = dyadic_length(rng);
    t += len;
    y += slopes[static_cast<std::size_t>(i)] * len;
    bp.push_back({t, y});
  }
  const double tail_slope = slopes.back();
  switch (cls) {
    case YoungClass::Y1:
      return YoungFunction::piecewise_linear(std::move(bp), SlopeTail{tail_slope});
    case YoungClass::Y2: {
      const double gap = dyadic_length(rng);
      BoundedTail bt{t + gap, ExtReal::infinity(), {}};
      if (rng.bernoulli(0.3)) bt.kappa = gap * tail_slope;
      return YoungFunction::piecewise_linear(std::move(bp), bt);
    }
    case YoungClass::Y3: {
      const double gap = dyadic_length(rng);
      return YoungFunction::piecewise_linear(std::move(bp),
                                             BoundedTail{t + gap, ExtReal(y + tail_slope * gap), {}});
    }
  }
  throw std::logic_error("gen_young: bad class");
}

MeasureSpace gen_space(CounterRng& rng, int atoms) {
  std::vector<double> w(static_cast<std::size_t>(atoms));
  for (double& x : w) x = rng.log_uniform(0x1p-4, 0x1p4);
  return MeasureSpace(std::move(w));
}

SimpleFunction gen_simple(CounterRng& rng, const MeasureSpace& space, double b) {
  std::vector<double> v(space.size());
  for (double& x : v) x = rng.log_uniform(0x1p-6, 0x1p6);
  if (b < kInf && rng.bernoulli(0.5)) {
    const double target = rng.bernoulli(0.2) ? b : b * rng.log_uniform(0.25, 2.0);
    auto top = std::max_element(v.begin(), v.end());
    const double scale = target / *top;
    for (double& x : v) x *= scale;
    *top = target;
  }
  return SimpleFunction(space, std::move(v));
}

GeneratedTriple gen_triple(CounterRng& rng, const CampaignConfig& cfg) {
  const double u = rng.uniform01();
  if (u < 0.35) {
    const double p1 = rng.uniform(2.0, 6.0), p3 = rng.uniform(2.0, 6.0);
    const double p2 = 1.0 / (1.0 / p1 + 1.0 / p3);
    if (u < 0.15)
      return {{YoungFunction::power(p1), YoungFunction::power(p2), YoungFunction::power(p3)}, TripleMode::Power};
    if (u < 0.25) {
      const double q1 = rng.uniform(1.0, 3.0), q3 = rng.uniform(1.0, 3.0);
      const double q2 = p2 * (q1 / p1 + q3 / p3);
      return {{YoungFunction::power_log(p1, q1), YoungFunction::power_log(p2, q2), YoungFunction::power_log(p3, q3)},
              TripleMode::PowerLog};
    }
    return {{YoungFunction::exp_power(p1), YoungFunction::exp_power(p2), YoungFunction::exp_power(p3)},
            TripleMode::ExpPower};
  }
  if (u < 0.675) {
    YoungFunction phi1 = gen_young(rng, cfg, gen_class(rng, cfg.class_mix));
    YoungFunction phi3 = gen_young(rng, cfg, gen_class(rng, bounded_mix(cfg.class_mix)), true);
    return {{phi1, YoungFunction::arg_scale(phi1, 1.0 / phi3.b()), phi3}, TripleMode::Scaled};
  }
  YoungFunction phi1 = gen_young(rng, cfg, gen_class(rng, bounded_mix(cfg.class_mix)), true);
  YoungFunction phi3 = gen_young(rng, cfg, gen_class(rng, cfg.class_mix));
  return {{phi1, YoungFunction::arg_scale(phi3, 1.0 / phi1.b()), phi3}, TripleMode::ScaledSymmetric};
}

CaseOutcome run_case(const CampaignConfig& cfg, Check check, std::int64_t case_index, bool reverify) {
  Case c(cfg, check, case_index, reverify);
  try {
    switch (check) {
      case Check::Holder: check_holder(c); break;
      case Check::Witness: check_witness(c); break;
      case Check::Sandwich: check_sandwich(c); break;
      case Check::NormsEquivalence: check_equivalence(c); break;
      case Check::Lattice: check_lattice(c); break;
      case Check::Fatou: check_fatou(c); break;
      case Check::QuasiTriangle: check_quasi_triangle(c); break;
      case Check::Normalization: check_normalization(c); break;
      case Check::Embedding: check_embedding(c); break;
      case Check::Homogeneity: check_homogeneity(c); break;
      case Check::LuxTriangle: check_lux_triangle(c); break;
      case Check::MonotoneLimit: check_monotone_limit(c); break;
    }
  } catch (const std::exception& e) {
    c.out.tags.push_back("error");
    c.sides["error"] = e.what();
    c.verdict(false, -kInf);
  }
  std::sort(c.out.tags.begin(), c.out.tags.end());
  c.out.tags.erase(std::unique(c.out.tags.begin(), c.out.tags.end()), c.out.tags.end());
  if (!c.out.pass) {
    c.out.record = json{{"check", to_string(check)}, {"seed", cfg.seed},   {"case", case_index},
                        {"sub_seed", c.sub_seed},    {"tags", c.out.tags}, {"slack", num(c.out.slack)},
                        {"inputs", c.inputs},        {"sides", c.sides}};
  }
  return c.out;
}

bool CampaignReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.fail == 0; });
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  return run_with(cfg, [&](std::vector<std::vector<CaseOutcome>>& results) {
    const auto n = static_cast<std::int64_t>(results.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
    for (std::int64_t i = 0; i < n; ++i) run_row(cfg, i, results[static_cast<std::size_t>(i)]);
  });
}

CampaignReport run_campaign_serial(const CampaignConfig& cfg) {
  return run_with(cfg, [&](std::vector<std::vector<CaseOutcome>>& results) {
    for (std::size_t i = 0; i < results.size(); ++i) run_row(cfg, static_cast<std::int64_t>(i), results[i]);
  });
}

json to_json(const CampaignReport& r, bool include_timing) {
  json checks = json::object();
  for (const auto& [name, s] : r.checks) {
    checks[name] = {{"cases", s.cases},
                    {"pass", s.pass},
                    {"fail", s.fail},
                    {"worst_slack", num(s.worst_slack)},
                    {"tags", s.tags}};
  }
  json j{{"schema", 1},
         {"rng", std::string(kRngAlgorithm)},
         {"config", to_json(r.config)},
         {"checks", checks},
         {"counterexamples", r.counterexamples}};
  if (include_timing) j["wall_time_s"] = r.wall_seconds;
  return j;
}

void write_report(const CampaignReport& r, const std::string& path, const std::string& corpus_dir,
                  bool include_timing) {
  namespace fs = std::filesystem;
  {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report \"" + path + "\"");
    out << to_json(r, include_timing).dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for \"" + path + "\"");
  }
  if (corpus_dir.empty()) return;
  fs::create_directories(corpus_dir);
  for (const auto& ce : r.counterexamples) {
    std::ostringstream name;
    name << std::setw(8) << std::setfill('0') << ce["case"].get<std::int64_t>() << '-'
         << ce["check"].get<std::string>() << ".json";
    std::ofstream out(fs::path(corpus_dir) / name.str());
    if (!out) throw std::runtime_error("cannot write corpus entry \"" + name.str() + "\"");
    out << ce.dump(2) << '\n';
  }
}

}  // namespace orlicz::fuzz
