#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orlicz {

namespace {

constexpr int kMaxBisection = 200;
constexpr int kMaxBracketSteps = 2100;

void require_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::domain_error("lambda must be finite and > 0");
}

/// Smallest λ where a monotone predicate turns true.
///
/// `floor` is a point below which the predicate is known false (c_N / b for
/// bounded Φ); pass 0 when no such point exists.
template <class Pred>
double threshold_search(const Pred& holds, double hi, double floor) {
  int steps = 0;
  while (!holds(hi)) {
    hi *= 2;
    if (++steps > kMaxBracketSteps) throw std::runtime_error("norm: upper bracket not found");
  }
  double lo;
  if (floor > 0.0) {
    if (holds(floor)) return floor;
    lo = floor;
  } else {
    lo = hi;
    steps = 0;
    do {
      hi = lo;
      lo /= 2;
      if (++steps > kMaxBracketSteps) throw std::runtime_error("norm: lower bracket not found");
    } while (holds(lo));
  }
  for (int i = 0; i < kMaxBisection; ++i) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (holds(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

/// c_N / Φ^{-1}(1 / T_1): at this λ every term Φ(c_k/λ) is at most 1/T_1.
double upper_guess(const YoungFunction& phi, const LayerForm& lf) {
  return lf.top() / phi.inverse(1.0 / lf.tails.front());
}

double floor_guess(const YoungFunction& phi, const LayerForm& lf) {
  return phi.b() < kInf ? lf.top() / phi.b() : 0.0;
}

std::optional<double> residual_if_applicable(const YoungFunction& phi, const LayerForm& lf, double lambda) {
  if (phi.classify() == YoungClass::Y3) return std::nullopt;
  return std::abs(weak_functional(phi, lf, lambda) - 1.0);
}

}  // namespace

std::string to_string(NormMethod m) {
  switch (m) {
    case NormMethod::PredicateBisection: return "predicate-bisection";
    case NormMethod::RootEquation: return "root-equation";
    case NormMethod::ClosedForm: return "closed-form";
  }
  return "?";
}

ExtReal level_sup(std::span<const ExtReal> values, std::span<const double> weights) {
  if (values.size() != weights.size()) throw std::invalid_argument("level_sup: size mismatch");
  std::vector<std::pair<double, double>> finite;  // (value, weight) with 0 < value < ∞
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k].is_zero()) continue;
    if (values[k].is_inf()) return ExtReal::infinity();
    finite.emplace_back(values[k].value(), weights[k]);
  }
  std::sort(finite.begin(), finite.end());
  // Sweep from the top: at level v the mass {value >= v} is the running sum,
  // and sup over [v_prev, v) of u μ({value > u}) is v times that mass.
  double best = 0.0;
  double mass = 0.0;
  for (std::size_t i = finite.size(); i-- > 0;) {
    mass += finite[i].second;
    if (i == 0 || finite[i - 1].first != finite[i].first) best = std::max(best, finite[i].first * mass);
  }
  return ExtReal(best);
}

double weak_functional(const YoungFunction& phi, const LayerForm& lf, double lambda) {
  double best = 0.0;
  for (std::size_t j = 0; j < lf.size(); ++j) {
    double v = left_limit(phi, lf.levels[j] / lambda);
    if (v == kInf) return kInf;
    best = std::max(best, v * lf.tails[j]);
  }
  return best;
}

double lux_functional(const YoungFunction& phi, const LayerForm& lf, double lambda) {
  double total = 0.0;
  for (std::size_t j = 0; j < lf.size(); ++j) {
    double v = phi(lf.levels[j] / lambda);
    if (v == kInf) return kInf;
    total += v * lf.masses[j];
  }
  return total;
}

ExtReal lux_modular(const YoungFunction& phi, const SimpleFunction& f, double lambda) {
  require_lambda(lambda);
  ExtReal total;
  for (std::size_t k = 0; k < f.size(); ++k)
    total = total + mul(ExtReal(phi(f.value(k) / lambda)), ExtReal(f.space().weight(k)));
  return total;
}

NormResult lux_norm(const YoungFunction& phi, const SimpleFunction& f) {
  if (f.is_zero()) return {ExtReal::zero(), NormMethod::PredicateBisection, std::nullopt};
  const LayerForm lf = canonicalize(f);
  auto holds = [&](double lambda) { return lux_functional(phi, lf, lambda) <= 1.0; };
  double lambda = threshold_search(holds, upper_guess(phi, lf), floor_guess(phi, lf));
  return {ExtReal(lambda), NormMethod::PredicateBisection, std::nullopt};
}

ExtReal weak_sup_form1(const YoungFunction& phi, const SimpleFunction& f, double lambda) {
  require_lambda(lambda);
  if (f.is_zero()) return ExtReal::zero();
  return ExtReal(weak_functional(phi, canonicalize(f), lambda));
}

ExtReal weak_sup_form2(const YoungFunction& phi, const SimpleFunction& f, double lambda) {
  require_lambda(lambda);
  if (f.is_zero()) return ExtReal::zero();
  LayerForm lf = canonicalize(f);
  for (double& c : lf.levels) c /= lambda;

  // u -> μ(f, Φ^{-1}(u)) only jumps where u crosses a finite value Φ(c_j).
  std::vector<double> jumps;
  for (double c : lf.levels) {
    double v = phi(c);
    if (v > 0.0 && v < kInf) jumps.push_back(v);
  }
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());

  double best = 0.0;
  double prev = 0.0;
  for (double v : jumps) {
    double probe = prev + (v - prev) / 2;
    double tail = distribution(lf, phi.inverse(probe));
    best = std::max(best, v * tail);
    prev = v;
  }
  // Beyond the last jump the tail is constant; any mass left means the
  // product is unbounded in u.
  double probe = prev > 0.0 ? 2 * prev : 1.0;
  if (distribution(lf, phi.inverse(probe)) > 0.0) return ExtReal::infinity();
  return ExtReal(best);
}

double weak_sup_form2_grid(const YoungFunction& phi, const SimpleFunction& f, int points) {
  if (f.is_zero()) return 0.0;
  if (points < 2) throw std::invalid_argument("weak_sup_form2_grid: need at least two points");
  const LayerForm lf = canonicalize(f);
  double lo = kInf, hi = 0.0;
  for (double c : lf.levels) {
    double v = phi(c);
    if (v > 0.0 && v < kInf) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hi == 0.0) {
    lo = 1e-9;
    hi = 1e9;
  }
  lo /= 1e3;
  hi *= 1e3;
  const double step = std::log(hi / lo) / (points - 1);
  double best = 0.0;
  for (int i = 0; i < points; ++i) {
    double u = lo * std::exp(step * i);
    best = std::max(best, u * distribution(lf, phi.inverse(u)));
  }
  return best;
}

ExtReal weak_sup_form3(const YoungFunction& phi, const SimpleFunction& f, double lambda) {
  require_lambda(lambda);
  std::vector<ExtReal> pushed;
  pushed.reserve(f.size());
  for (double v : f.values()) pushed.emplace_back(phi(v / lambda));
  return level_sup(pushed, f.space().weights());
}

NormResult weak_norm(const YoungFunction& phi, const SimpleFunction& f) {
  if (f.is_zero()) return {ExtReal::zero(), NormMethod::PredicateBisection, std::nullopt};
  const LayerForm lf = canonicalize(f);
  auto holds = [&](double lambda) { return weak_functional(phi, lf, lambda) <= 1.0; };
  double lambda = threshold_search(holds, upper_guess(phi, lf), floor_guess(phi, lf));
  return {ExtReal(lambda), NormMethod::PredicateBisection, residual_if_applicable(phi, lf, lambda)};
}

NormResult weak_norm_closed_form(const YoungFunction& phi, const SimpleFunction& f) {
  if (f.is_zero()) return {ExtReal::zero(), NormMethod::ClosedForm, std::nullopt};
  const LayerForm lf = canonicalize(f);
  // Φ(c_j/λ) T_j <= 1  <=>  c_j/λ <= Φ^{-1}(1/T_j).
  double lambda = 0.0;
  for (std::size_t j = 0; j < lf.size(); ++j)
    lambda = std::max(lambda, lf.levels[j] / phi.inverse(1.0 / lf.tails[j]));
  return {ExtReal(lambda), NormMethod::ClosedForm, residual_if_applicable(phi, lf, lambda)};
}

double normalization_audit(const YoungFunction& phi, const SimpleFunction& f) {
  if (phi.classify() == YoungClass::Y3)
    throw std::invalid_argument("normalization_audit: equality is not asserted for Y3");
  if (f.is_zero()) throw ZeroFunctionError();
  const LayerForm lf = canonicalize(f);
  const double lambda = weak_norm(phi, f).value.value();
  return std::abs(weak_functional(phi, lf, lambda) - 1.0);
}

bool le1_audit(const YoungFunction& phi, const SimpleFunction& f) {
  if (f.is_zero()) throw ZeroFunctionError();
  const double lambda = weak_norm(phi, f).value.value();
  return weak_sup_form3(phi, f, lambda) <= ExtReal(1.0 + 1e-9);
}

EmbeddingReport embedding_audit(const YoungFunction& phi, const SimpleFunction& f) {
  EmbeddingReport rep;
  rep.weak = weak_norm(phi, f).value.value();
  rep.lux = lux_norm(phi, f).value.value();
  rep.sup_norm = f.max_value();
  rep.b = phi.b();
  rep.weak_le_lux = rep.weak <= rep.lux * (1.0 + 1e-9);
  if (rep.b < kInf) rep.sup_le_b_weak = rep.sup_norm <= rep.b * rep.weak * (1.0 + 1e-9);
  rep.pass = rep.weak_le_lux && rep.sup_le_b_weak.value_or(true);
  return rep;
}

FatouReport fatou_audit(const YoungFunction& phi, const SimpleFunction& f, int stages) {
  FatouReport rep;
  for (const auto& fj : monotone_stages(f, stages)) rep.stage_norms.push_back(weak_norm(phi, fj).value.value());
  rep.limit_norm = weak_norm(phi, f).value.value();
  double sup = 0.0;
  for (std::size_t j = 0; j < rep.stage_norms.size(); ++j) {
    if (j > 0 && rep.stage_norms[j] < rep.stage_norms[j - 1] * (1.0 - 1e-12)) rep.monotone = false;
    sup = std::max(sup, rep.stage_norms[j]);
  }
  rep.bounded = rep.limit_norm <= sup + 1e-9;
  rep.pass = rep.monotone && rep.bounded;
  return rep;
}

}  // namespace orlicz
