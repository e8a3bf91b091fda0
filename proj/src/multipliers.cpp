#include "orlicz/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orlicz/norms.hpp"
#include "orlicz/rng.hpp"

namespace orlicz {

namespace {

constexpr double kOverflow = 1e300;
constexpr int kRefinePoints = 201;

SimpleFunction product(const SimpleFunction& f, const SimpleFunction& g) {
  if (f.size() != g.size()) throw std::invalid_argument("product: functions live on different spaces");
  std::vector<double> v(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) v[k] = f.value(k) * g.value(k);
  return f.with_values(std::move(v));
}

std::optional<double> safe_ratio(double num, double den) {
  if (num == 0.0 && den == 0.0) return std::nullopt;
  if (den == 0.0 || num == kInf) return kInf;
  return num / den;
}

double weak(const YoungFunction& phi, const SimpleFunction& f, NormMethod route = NormMethod::PredicateBisection) {
  const NormResult r = route == NormMethod::ClosedForm ? weak_norm_closed_form(phi, f) : weak_norm(phi, f);
  return r.value.value();
}

struct Sup {
  double value = 0.0;
  double arg = 0.0;
  std::size_t index = 0;
};

template <class Ratio>
Sup grid_sup(const Ratio& ratio, const std::vector<double>& pts) {
  Sup s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto r = ratio(pts[i]);
    if (r && *r > s.value) s = {*r, pts[i], i};
  }
  return s;
}

template <class Ratio>
void refine(const Ratio& ratio, const std::vector<double>& pts, Sup& s) {
  if (pts.size() < 2 || s.value == kInf) return;
  double lo = pts[s.index == 0 ? 0 : s.index - 1];
  double hi = pts[std::min(s.index + 1, pts.size() - 1)];
  if (!(hi > lo)) return;
  const double step = std::log(hi / lo) / (kRefinePoints - 1);
  for (int i = 0; i < kRefinePoints; ++i) {
    double u = lo * std::exp(step * i);
    auto r = ratio(u);
    if (r && *r > s.value) {
      s.value = *r;
      s.arg = u;
    }
  }
}

/// Far probes beyond the edge holding the sup. Slowly converging ratios (log
/// corrections) still creep upward just past the grid, so growth is judged
/// between two probes 150 decades apart.
template <class Ratio>
bool grows_past_edge(const Ratio& ratio, const std::vector<double>& pts, const Sup& s) {
  double near, far;
  if (s.index + 1 == pts.size()) {
    near = 1e150;
    far = 1e300;
    if (far <= pts.back()) return false;
    near = std::max(near, pts.back());
  } else if (s.index == 0) {
    near = 1e-150;
    far = 1e-300;
    if (far >= pts.front()) return false;
    near = std::min(near, pts.front());
  } else {
    return false;
  }
  auto r_near = ratio(near), r_far = ratio(far);
  if (!r_far) return false;
  if (*r_far >= kOverflow) return true;
  return *r_far > 1.1 * std::max(s.value, r_near.value_or(0.0));
}

WitnessReport witness_impl(const YoungFunction& phi1, const YoungFunction& phi2, const YoungFunction& phi3,
                           const SimpleFunction& g, double c, NormMethod route) {
  if (g.is_zero()) throw ZeroFunctionError();
  WitnessReport rep{g};
  rep.norm_g = weak(phi3, g, route);
  const Triple t{phi1, phi2, phi3};
  rep.constant = std::max(c, required_lower_constant(t, g, route));

  std::vector<double> big_g(g.size()), h(g.size());
  bool some_positive = false;
  for (std::size_t k = 0; k < g.size(); ++k) {
    big_g[k] = phi3(g.value(k) / rep.norm_g);
    h[k] = big_g[k] > 0.0 && big_g[k] < kInf ? phi1.inverse(big_g[k]) : 0.0;
    some_positive = some_positive || big_g[k] > 0.0;
  }
  rep.h = g.with_values(h);
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (phi1(h[k]) > big_g[k] * (1.0 + 1e-12)) rep.pointwise_p1_ok = false;
    if (big_g[k] > 0.0) {
      double grown = phi2(rep.constant * h[k] * g.value(k) / rep.norm_g);
      if (grown < big_g[k] * (1.0 - 1e-9)) rep.pointwise_growth_ok = false;
    }
  }
  if (!some_positive) rep.pointwise_growth_ok = false;

  rep.norm_h = weak(phi1, rep.h, route);
  rep.norm_hg = weak(phi2, product(rep.h, g), route);
  rep.lower_bound = rep.norm_g / rep.constant;
  rep.norm_h_ok = rep.norm_h <= 1.0 + 1e-9;
  rep.lower_ok = rep.norm_hg >= rep.lower_bound * (1.0 - 1e-6);
  rep.slack = rep.norm_hg / rep.lower_bound - 1.0;
  rep.pass = rep.norm_h_ok && rep.lower_ok && rep.pointwise_p1_ok && rep.pointwise_growth_ok;
  return rep;
}

}  // namespace

void LogGrid::validate() const {
  if (!(u_min > 0.0) || !(u_max >= u_min) || !std::isfinite(u_max))
    throw std::invalid_argument("grid: need 0 < u_min <= u_max < inf");
  if (count < 2) throw std::invalid_argument("grid: need at least two points");
}

std::vector<double> LogGrid::points() const {
  validate();
  std::vector<double> pts(static_cast<std::size_t>(count));
  const double step = std::log(u_max / u_min) / (count - 1);
  for (int i = 0; i < count; ++i) pts[static_cast<std::size_t>(i)] = u_min * std::exp(step * i);
  pts.back() = u_max;
  return pts;
}

std::optional<double> upper_ratio(const Triple& t, double u) {
  return safe_ratio(t.phi1.inverse(u) * t.phi3.inverse(u), t.phi2.inverse(u));
}

std::optional<double> lower_ratio(const Triple& t, double u) {
  return safe_ratio(t.phi2.inverse(u), t.phi1.inverse(u) * t.phi3.inverse(u));
}

TripleConstant estimate_constants(const Triple& t, const LogGrid& grid) {
  const auto pts = grid.points();
  TripleConstant tc;
  tc.grid = grid;
  auto up = [&](double u) { return upper_ratio(t, u); };
  auto low = [&](double u) { return lower_ratio(t, u); };

  Sup su = grid_sup(up, pts);
  Sup sl = grid_sup(low, pts);
  refine(up, pts, su);
  refine(low, pts, sl);
  tc.c_upper = su.value;
  tc.c_lower = sl.value;
  tc.argmax_upper = su.arg;
  tc.argmax_lower = sl.arg;
  tc.upper_bounded = su.value < kOverflow && !grows_past_edge(up, pts, su);
  tc.lower_bounded = sl.value < kOverflow && !grows_past_edge(low, pts, sl);
  return tc;
}

void require_bounded(const TripleConstant& c) {
  if (!c.upper_bounded) throw UnboundedOnGrid("unbounded on grid: upper constant");
  if (!c.lower_bounded) throw UnboundedOnGrid("unbounded on grid: lower constant");
}

double required_upper_constant(const Triple& t, const SimpleFunction& f, const SimpleFunction& g,
                               NormMethod route) {
  if (f.is_zero() || g.is_zero()) return 0.0;
  const double nf = weak(t.phi1, f, route);
  const double ng = weak(t.phi3, g, route);
  double need = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    double u = std::max(t.phi1(f.value(k) / nf), t.phi3(g.value(k) / ng));
    if (auto r = upper_ratio(t, u)) need = std::max(need, *r);
  }
  return need;
}

double required_lower_constant(const Triple& t, const SimpleFunction& g, NormMethod route) {
  if (g.is_zero()) return 0.0;
  const double ng = weak(t.phi3, g, route);
  double need = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    double u = t.phi3(g.value(k) / ng);
    if (!(u > 0.0 && u < kInf)) continue;
    if (auto r = lower_ratio(t, u)) need = std::max(need, *r);
  }
  return need;
}

HolderReport holder_verify(const Triple& t, const SimpleFunction& f, const SimpleFunction& g, double c,
                           NormMethod route) {
  if (!(c > 0.0)) throw std::invalid_argument("holder_verify: constant must be > 0");
  HolderReport rep;
  rep.constant = c;
  rep.norm_f = weak(t.phi1, f, route);
  rep.norm_g = weak(t.phi3, g, route);
  rep.norm_fg = weak(t.phi2, product(f, g), route);
  rep.rhs = 4.0 * c * rep.norm_f * rep.norm_g;
  rep.holds = rep.norm_fg <= rep.rhs * (1.0 + 1e-9);
  rep.slack = rep.norm_fg > 0.0 ? rep.rhs / rep.norm_fg - 1.0 : kInf;
  if (rep.norm_f == 0.0 || rep.norm_g == 0.0) return rep;

  rep.assumption_holds = c >= required_upper_constant(t, f, g, route) * (1.0 - 1e-12);
  const double c_slack = c * (1.0 + 1e-9);
  for (std::size_t k = 0; k < f.size(); ++k) {
    double x = f.value(k) / rep.norm_f;
    double y = g.value(k) / rep.norm_g;
    double lhs = t.phi2(x * y / c_slack);
    double rhs = t.phi1(x) + t.phi3(y);
    if (lhs > rhs * (1.0 + 1e-9)) rep.pointwise_holds = false;
    if (lhs > 0.0) rep.worst_pointwise = std::max(rep.worst_pointwise, rhs > 0.0 ? lhs / rhs : kInf);
  }
  return rep;
}

WitnessReport witness(const Triple& t, const SimpleFunction& g, double c, NormMethod route) {
  if (t.phi2.classify() == YoungClass::Y3 || t.phi3.classify() == YoungClass::Y3)
    throw std::invalid_argument("witness: Φ2 and Φ3 must be in Y1 ∪ Y2; use witness_y3");
  if (!(c > 0.0)) throw std::invalid_argument("witness: constant must be > 0");
  return witness_impl(t.phi1, t.phi2, t.phi3, g, c, route);
}

WitnessReport witness_y3(const Triple& t, const SimpleFunction& g, double c, double delta,
                         NormMethod route) {
  const bool y3_2 = t.phi2.classify() == YoungClass::Y3;
  const bool y3_3 = t.phi3.classify() == YoungClass::Y3;
  if (!y3_2 && !y3_3) throw std::invalid_argument("witness_y3: neither Φ2 nor Φ3 is in Y3; use witness");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("witness_y3: delta must lie in (0, 1)");
  if (!(c > 0.0)) throw std::invalid_argument("witness_y3: constant must be > 0");
  const YoungFunction psi2 = y3_2 ? envelope_y2(t.phi2, delta) : t.phi2;
  const YoungFunction psi3 = y3_3 ? envelope_y2(t.phi3, delta) : t.phi3;

  WitnessReport rep = witness_impl(t.phi1, psi2, psi3, g, c / delta, route);
  rep.delta = delta;
  // Back to the original functions: ||hg||_Φ2 >= δ ||hg||_Ψ2 and ||g||_Ψ3 >= ||g||_Φ3.
  rep.norm_g = weak(t.phi3, g, route);
  rep.norm_hg = weak(t.phi2, product(rep.h, g), route);
  rep.lower_bound = delta * rep.norm_g / rep.constant;
  rep.lower_ok = rep.norm_hg >= rep.lower_bound * (1.0 - 1e-6);
  rep.slack = rep.norm_hg / rep.lower_bound - 1.0;
  rep.pass = rep.norm_h_ok && rep.lower_ok && rep.pointwise_p1_ok && rep.pointwise_growth_ok;
  return rep;
}

PwmEstimate pwm_bruteforce(const YoungFunction& phi1, const YoungFunction& phi2, const SimpleFunction& g,
                           std::size_t budget, std::span<const SimpleFunction> seeds, std::uint64_t seed) {
  const std::size_t n = g.size();
  if (n > 4) throw std::invalid_argument("pwm_bruteforce: at most four atoms");
  PwmEstimate est;
  if (g.is_zero()) return est;

  auto ratio = [&](const std::vector<double>& fv) -> double {
    ++est.evaluations;
    SimpleFunction f = g.with_values(fv);
    if (f.is_zero()) return 0.0;
    double nf = weak(phi1, f);
    return weak(phi2, product(f, g)) / nf;
  };
  auto normalized = [](std::vector<double> v) {
    double m = *std::max_element(v.begin(), v.end());
    if (m > 0.0)
      for (double& x : v) x /= m;
    return v;
  };
  auto consider = [&](std::vector<double> fv) {
    if (est.evaluations >= budget) return false;
    fv = normalized(std::move(fv));
    double r = ratio(fv);
    if (r > est.estimate) {
      est.estimate = r;
      est.best_f = std::move(fv);
      return true;
    }
    return false;
  };

  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<double> fv(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) fv[k] = 1.0;
    consider(fv);
  }
  for (const auto& s : seeds) consider(std::vector<double>(s.values().begin(), s.values().end()));

  auto local_search = [&](std::vector<double> start) {
    double step = 4.0;
    while (step > 1.0 + 1e-4 && est.evaluations < budget) {
      bool improved = false;
      for (std::size_t k = 0; k < n && est.evaluations < budget; ++k) {
        for (double factor : {step, 1.0 / step}) {
          if (start[k] == 0.0) continue;
          std::vector<double> trial = start;
          trial[k] *= factor;
          if (consider(trial)) {
            start = est.best_f;
            improved = true;
          }
        }
      }
      if (!improved) step = std::sqrt(step);
    }
  };

  if (!est.best_f.empty()) local_search(est.best_f);
  CounterRng rng(derive_seed(seed, 0x707764));
  while (est.evaluations < budget) {
    std::vector<double> fv(n);
    for (double& x : fv) x = rng.log_uniform(1e-3, 1.0);
    double before = est.estimate;
    consider(fv);
    if (est.estimate > before) local_search(est.best_f);
  }
  return est;
}

SandwichReport sandwich_audit(const Triple& t, const SimpleFunction& g, const LogGrid& grid, std::size_t budget,
                              double delta, NormMethod route) {
  SandwichReport rep;
  rep.constants = estimate_constants(t, grid);
  require_bounded(rep.constants);
  rep.norm_g = weak(t.phi3, g, route);
  if (g.is_zero()) return rep;

  const bool y3 = t.phi2.classify() == YoungClass::Y3 || t.phi3.classify() == YoungClass::Y3;
  WitnessReport w = y3 ? witness_y3(t, g, rep.constants.c_lower, delta, route)
                        : witness(t, g, rep.constants.c_lower, route);
  rep.c_lower_used = w.constant;
  rep.lower_bound = w.lower_bound;
  rep.upper_bound = 4.0 * rep.constants.c_upper * rep.norm_g;

  const SimpleFunction seeds[] = {w.h};
  rep.estimate = pwm_bruteforce(t.phi1, t.phi2, g, budget, seeds).estimate;
  rep.lower_ok = rep.estimate >= rep.lower_bound * (1.0 - 1e-6);
  rep.upper_ok = rep.estimate <= rep.upper_bound * (1.0 + 1e-6);
  rep.pass = rep.lower_ok && rep.upper_ok;
  return rep;
}

double surrogate_inverse(const YoungFunction& phi, double u) {
  const auto& d = phi.node().descriptor;
  if (const auto* f = std::get_if<family::Power>(&d)) return std::pow(u, 1.0 / f->p);
  if (const auto* f = std::get_if<family::PowerLog>(&d))
    return std::pow(u, 1.0 / f->p) * std::pow(std::max(1.0, std::log(u)), -f->q / f->p);
  if (const auto* f = std::get_if<family::ExpPower>(&d))
    return u < 2.0 ? std::pow(u, 1.0 / f->p) : std::pow(std::log(u), 1.0 / f->p);
  throw std::invalid_argument("surrogate_inverse: family must be power, powerlog, or exppower");
}

namespace {

double ratio_bound(const YoungFunction& phi, double u_min, double u_max, int count,
                   std::vector<std::pair<double, double>>* table) {
  const auto pts = LogGrid{u_min, u_max, count}.points();
  double k = 1.0;
  for (double u : pts) {
    double r = phi.inverse(u) / surrogate_inverse(phi, u);
    if (table) table->emplace_back(u, r);
    k = std::max(k, std::max(r, 1.0 / r));
  }
  return k;
}

}  // namespace

AsymptoticsReport example_asymptotics_audit(const YoungFunction& phi, double u_min, double u_max, int count) {
  if (!(u_min >= 1e-6 && u_max <= 1e12 && u_min < u_max))
    throw std::invalid_argument("example_asymptotics_audit: range must lie within [1e-6, 1e12]");
  AsymptoticsReport rep;
  rep.k = ratio_bound(phi, u_min, u_max, count, &rep.table);
  // Two more decades on each side at the same density.
  const double decades = std::log10(u_max / u_min);
  const int ext_count = static_cast<int>(std::lround((count - 1) * (decades + 4) / decades)) + 1;
  rep.k_extended = ratio_bound(phi, u_min / 100, u_max * 100, ext_count, nullptr);
  rep.finite = std::isfinite(rep.k) && std::isfinite(rep.k_extended);
  rep.relative_change = std::abs(rep.k_extended - rep.k) / rep.k;
  rep.stable = rep.relative_change < 0.05;
  rep.pass = rep.finite && rep.stable;
  return rep;
}

}  // namespace orlicz
