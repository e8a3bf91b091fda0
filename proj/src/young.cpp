#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace orlicz {

namespace {

constexpr double kSlopeRelTol = 1e-12;
constexpr int kMaxBisection = 200;
constexpr int kMaxBracketGrowth = 2100;
constexpr int kMaxSettleSteps = 64;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool slope_not_below(double next, double prev) {
  return next >= prev - kSlopeRelTol * std::max(std::abs(prev), 1e-300);
}

double eval_pl(const family::PiecewiseLinear& pl, double t) {
  if (t == kInf) return kInf;
  const auto& bp = pl.breakpoints;
  const Breakpoint& last = bp.back();
  if (t <= last.t) {
    if (t == last.t) return last.y;
    auto it = std::upper_bound(bp.begin(), bp.end(), t,
                               [](double v, const Breakpoint& p) { return v < p.t; });
    auto i = static_cast<std::size_t>(std::distance(bp.begin(), it)) - 1;
    return bp[i].y + pl.slopes[i] * (t - bp[i].t);
  }
  return std::visit(
      overloaded{
          [&](const SlopeTail& s) { return last.y + s.slope * (t - last.t); },
          [&](const BoundedTail& bt) -> double {
            if (bt.phi_b.is_inf()) {
              if (t >= bt.b) return kInf;
              double x = t - last.t;
              double d = bt.b - last.t;
              return last.y + pl.kappa * x / (d - x);
            }
            if (t > bt.b) return kInf;
            if (t == bt.b) return bt.phi_b.value();
            return last.y + pl.tail_slope * (t - last.t);
          }},
      pl.tail);
}

double inverse_pl(const family::PiecewiseLinear& pl, double u, double a) {
  if (u == 0.0) return a;
  const auto& bp = pl.breakpoints;
  // First breakpoint strictly above level u.
  auto it = std::upper_bound(bp.begin(), bp.end(), u,
                             [](double v, const Breakpoint& p) { return v < p.y; });
  if (it != bp.end()) {
    auto j = static_cast<std::size_t>(std::distance(bp.begin(), it));
    // j >= 1 because y_0 = 0 <= u.
    const Breakpoint& lo = bp[j - 1];
    double t = lo.t + (u - lo.y) / pl.slopes[j - 1];
    return std::clamp(t, lo.t, bp[j].t);
  }
  const Breakpoint& last = bp.back();
  return std::visit(
      overloaded{
          [&](const SlopeTail& s) { return last.t + (u - last.y) / s.slope; },
          [&](const BoundedTail& bt) -> double {
            if (bt.phi_b.is_inf()) {
              double v = u - last.y;
              double d = bt.b - last.t;
              double x = v * d / (pl.kappa + v);
              return std::min(last.t + x, bt.b);
            }
            if (u >= bt.phi_b.value()) return bt.b;
            return std::min(last.t + (u - last.y) / pl.tail_slope, bt.b);
          }},
      pl.tail);
}

/// inf{t : Φ(t) > u} by bisection, keeping Φ(lo) <= u < Φ(hi).
template <class F>
double bisect_level(const F& phi, double u, double lo, double hi) {
  for (int i = 0; i < kMaxBisection; ++i) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (phi(mid) > u)
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

template <class F>
double bisect_inverse(const F& phi, double u, double a, double b) {
  double hi;
  if (b < kInf) {
    if (phi(b) <= u) return b;
    hi = b;
  } else {
    hi = std::max(2 * a, 1.0);
    int n = 0;
    while (phi(hi) <= u) {
      hi *= 2;
      if (++n > kMaxBracketGrowth) throw std::runtime_error("inverse: bracket growth failed");
    }
  }
  return bisect_level(phi, u, a, hi);
}

family::PiecewiseLinear build_pl(std::vector<Breakpoint> breakpoints, Tail tail, bool check_convex) {
  require(!breakpoints.empty(), "piecewise linear: breakpoints must be nonempty");
  require(breakpoints.front().t == 0.0 && breakpoints.front().y == 0.0,
          "piecewise linear: first breakpoint must be (0, 0)");
  family::PiecewiseLinear pl;
  pl.slopes.reserve(breakpoints.size());
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const auto& p = breakpoints[i];
    const auto& q = breakpoints[i + 1];
    require(std::isfinite(q.t) && std::isfinite(q.y), "piecewise linear: breakpoints must be finite");
    require(q.t > p.t, "piecewise linear: breakpoint t must be strictly increasing");
    require(q.y >= p.y, "piecewise linear: breakpoint y must be nondecreasing");
    double s = (q.y - p.y) / (q.t - p.t);
    if (check_convex && !pl.slopes.empty())
      require(slope_not_below(s, pl.slopes.back()), "piecewise linear: slopes must be nondecreasing");
    pl.slopes.push_back(s);
  }
  const double last_slope = pl.slopes.empty() ? 0.0 : pl.slopes.back();
  const Breakpoint last = breakpoints.back();

  std::visit(overloaded{
                 [&](const SlopeTail& s) {
                   require(std::isfinite(s.slope) && s.slope > 0.0,
                           "piecewise linear: tail slope must be finite and > 0");
                   if (check_convex)
                     require(slope_not_below(s.slope, last_slope),
                             "piecewise linear: tail slope below last segment slope");
                   pl.tail_slope = s.slope;
                 },
                 [&](const BoundedTail& bt) {
                   require(std::isfinite(bt.b) && bt.b > 0.0, "piecewise linear: b must be finite and > 0");
                   require(bt.b >= last.t, "piecewise linear: b must not precede the last breakpoint");
                   double d = bt.b - last.t;
                   if (bt.phi_b.is_inf()) {
                     require(d > 0.0, "piecewise linear: phi_b = inf needs b beyond the last breakpoint");
                     double kappa = bt.kappa.value_or(d * (last_slope > 0.0 ? last_slope : 1.0));
                     require(std::isfinite(kappa) && kappa > 0.0, "piecewise linear: kappa must be finite and > 0");
                     if (check_convex)
                       require(slope_not_below(kappa / d, last_slope),
                               "piecewise linear: barrier slope below last segment slope");
                     pl.kappa = kappa;
                   } else {
                     double pb = bt.phi_b.value();
                     require(pb >= last.y, "piecewise linear: phi_b below last breakpoint value");
                     if (d == 0.0) {
                       require(pb == last.y, "piecewise linear: phi_b must equal last y when b = last t");
                     } else {
                       pl.tail_slope = (pb - last.y) / d;
                       if (check_convex)
                         require(slope_not_below(pl.tail_slope, last_slope),
                                 "piecewise linear: chord slope to b below last segment slope");
                     }
                   }
                 }},
             tail);
  pl.breakpoints = std::move(breakpoints);
  pl.tail = std::move(tail);
  return pl;
}

double pl_a(const family::PiecewiseLinear& pl) {
  const auto& bp = pl.breakpoints;
  std::size_t k = 0;
  while (k + 1 < bp.size() && bp[k + 1].y == 0.0) ++k;
  if (k + 1 < bp.size()) return bp[k].t;
  const Breakpoint& last = bp.back();
  if (const auto* bt = std::get_if<BoundedTail>(&pl.tail)) {
    if (bt->phi_b.is_finite() && bt->phi_b.value() == 0.0) return bt->b;
  }
  return last.t;
}

double pl_b(const family::PiecewiseLinear& pl) {
  if (const auto* bt = std::get_if<BoundedTail>(&pl.tail)) return bt->b;
  return kInf;
}

double eval_descriptor(const Descriptor& d, double t) {
  return std::visit(
      overloaded{
          [&](const family::Power& f) { return t == kInf ? kInf : std::pow(t, f.p); },
          [&](const family::PowerLog& f) {
            if (t == kInf) return kInf;
            return std::pow(t, f.p) * std::pow(std::max(1.0, std::log(t)), f.q);
          },
          [&](const family::ExpPower& f) { return t == kInf ? kInf : std::expm1(std::pow(t, f.p)); },
          [&](const family::LinfIndicator&) { return t <= 1.0 ? 0.0 : kInf; },
          [&](const family::PiecewiseLinear& f) { return eval_pl(f, t); },
          [&](const family::Sum& f) { return f.lhs(t) + f.rhs(t); },
          [&](const family::ArgScale& f) { return f.inner(f.c * t); }},
      d);
}

YoungFunction::Node make_node(Descriptor d) {
  YoungFunction::Node n;
  std::visit(overloaded{
                 [&](const family::Power&) { n.a = 0.0, n.b = kInf; },
                 [&](const family::PowerLog&) { n.a = 0.0, n.b = kInf; },
                 [&](const family::ExpPower&) { n.a = 0.0, n.b = kInf; },
                 [&](const family::LinfIndicator&) { n.a = 1.0, n.b = 1.0; },
                 [&](const family::PiecewiseLinear& f) { n.a = pl_a(f), n.b = pl_b(f); },
                 [&](const family::Sum& f) {
                   n.a = std::min(f.lhs.a(), f.rhs.a());
                   n.b = std::min(f.lhs.b(), f.rhs.b());
                 },
                 [&](const family::ArgScale& f) { n.a = f.inner.a() / f.c, n.b = f.inner.b() / f.c; }},
             d);
  n.descriptor = std::move(d);
  if (n.b == kInf)
    n.cls = YoungClass::Y1;
  else
    n.cls = eval_descriptor(n.descriptor, n.b) == kInf ? YoungClass::Y2 : YoungClass::Y3;
  return n;
}

}  // namespace

std::string to_string(YoungClass c) {
  switch (c) {
    case YoungClass::Y1: return "Y1";
    case YoungClass::Y2: return "Y2";
    case YoungClass::Y3: return "Y3";
  }
  return "?";
}

YoungFunction YoungFunction::power(double p) {
  require(std::isfinite(p) && p >= 1.0, "power: p must be finite and >= 1");
  return YoungFunction(std::make_shared<const Node>(make_node(family::Power{p})));
}

YoungFunction YoungFunction::power_log(double p, double q) {
  require(std::isfinite(p) && p >= 1.0, "powerlog: p must be finite and >= 1");
  require(std::isfinite(q) && q >= 1.0, "powerlog: q must be finite and >= 1");
  return YoungFunction(std::make_shared<const Node>(make_node(family::PowerLog{p, q})));
}

YoungFunction YoungFunction::exp_power(double p) {
  require(std::isfinite(p) && p >= 1.0, "exppower: p must be finite and >= 1");
  return YoungFunction(std::make_shared<const Node>(make_node(family::ExpPower{p})));
}

YoungFunction YoungFunction::linf_indicator() {
  return YoungFunction(std::make_shared<const Node>(make_node(family::LinfIndicator{})));
}

YoungFunction YoungFunction::piecewise_linear(std::vector<Breakpoint> breakpoints, Tail tail) {
  return YoungFunction(
      std::make_shared<const Node>(make_node(build_pl(std::move(breakpoints), std::move(tail), true))));
}

YoungFunction YoungFunction::piecewise_linear_unvalidated(std::vector<Breakpoint> breakpoints, Tail tail) {
  return YoungFunction(
      std::make_shared<const Node>(make_node(build_pl(std::move(breakpoints), std::move(tail), false))));
}

YoungFunction YoungFunction::sum(YoungFunction lhs, YoungFunction rhs) {
  return YoungFunction(
      std::make_shared<const Node>(make_node(family::Sum{std::move(lhs), std::move(rhs)})));
}

YoungFunction YoungFunction::arg_scale(YoungFunction inner, double c) {
  require(std::isfinite(c) && c > 0.0, "argscale: c must be finite and > 0");
  return YoungFunction(std::make_shared<const Node>(make_node(family::ArgScale{std::move(inner), c})));
}

double YoungFunction::operator()(double t) const { return eval_descriptor(node_->descriptor, t); }

double YoungFunction::a() const { return node_->a; }
double YoungFunction::b() const { return node_->b; }
YoungClass YoungFunction::classify() const { return node_->cls; }

bool YoungFunction::is_piecewise_linear() const {
  return std::holds_alternative<family::PiecewiseLinear>(node_->descriptor);
}

const family::PiecewiseLinear* YoungFunction::as_piecewise_linear() const {
  return std::get_if<family::PiecewiseLinear>(&node_->descriptor);
}

double YoungFunction::inverse(double u) const {
  if (std::isnan(u) || u < 0.0) throw std::domain_error("inverse: u must be in [0, inf]");
  if (u == kInf) return kInf;
  if (u == 0.0) return node_->a;
  const double a = node_->a;
  const double b = node_->b;
  double t = std::visit(
      overloaded{
          [&](const family::Power& f) { return std::pow(u, 1.0 / f.p); },
          [&](const family::PowerLog& f) {
            // Φ(t) = t^p on [0, e].
            const double at_e = std::exp(f.p);
            if (u <= at_e) return std::pow(u, 1.0 / f.p);
            return bisect_inverse(*this, u, std::numbers::e, kInf);
          },
          [&](const family::ExpPower& f) { return std::pow(std::log1p(u), 1.0 / f.p); },
          [&](const family::LinfIndicator&) { return 1.0; },
          [&](const family::PiecewiseLinear& f) { return inverse_pl(f, u, a); },
          [&](const family::Sum&) { return bisect_inverse(*this, u, a, b); },
          [&](const family::ArgScale& f) { return f.inner.inverse(u) / f.c; }},
      node_->descriptor);
  // Closed forms can land a few ulps past the threshold; step back so that
  // Φ(Φ^{-1}(u)) <= u holds in floating point too.
  for (int i = 0; i < kMaxSettleSteps && t > a && (*this)(t) > u; ++i) t = std::nextafter(t, a);
  return t;
}

ExtReal YoungFunction::inverse_alt(ExtReal u) const {
  if (u.is_inf()) return ExtReal(node_->b);
  return inverse(u);
}

std::string YoungFunction::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const family::Power& f) { os << "Power(" << f.p << ")"; },
                 [&](const family::PowerLog& f) { os << "PowerLog(" << f.p << "," << f.q << ")"; },
                 [&](const family::ExpPower& f) { os << "ExpPower(" << f.p << ")"; },
                 [&](const family::LinfIndicator&) { os << "LinfIndicator"; },
                 [&](const family::PiecewiseLinear& f) {
                   os << "PL[" << f.breakpoints.size() << " bp, "
                      << (std::holds_alternative<SlopeTail>(f.tail) ? "slope" : "bounded") << "]";
                 },
                 [&](const family::Sum& f) { os << "Sum(" << f.lhs.describe() << "," << f.rhs.describe() << ")"; },
                 [&](const family::ArgScale& f) { os << "ArgScale(" << f.inner.describe() << "," << f.c << ")"; }},
             node_->descriptor);
  return os.str();
}

namespace {

bool le_rel(double x, double y, double rel_tol) {
  if (x <= y) return true;
  if (y == kInf) return true;
  if (x == kInf) return false;
  return x - y <= rel_tol * std::max(std::abs(x), std::abs(y));
}

bool eq_rel(double x, double y, double rel_tol) { return le_rel(x, y, rel_tol) && le_rel(y, x, rel_tol); }

}  // namespace

InversePropertyReport check_p1_p2_p3(const YoungFunction& phi, std::span<const ExtReal> samples,
                                     double rel_tol) {
  require(!samples.empty(), "check_p1_p2_p3: samples must be nonempty");
  InversePropertyReport rep;
  const bool bijective_class = phi.classify() != YoungClass::Y3;
  for (ExtReal t : samples) {
    InversePropertySample s;
    s.t = t;
    double tv = t.value();
    double phi_t = phi(tv);
    double inv_t = phi.inverse(tv);
    s.p1 = le_rel(phi(inv_t), tv, rel_tol) && le_rel(tv, phi.inverse(phi_t), rel_tol);
    if (phi_t > 0.0 && phi_t < kInf) s.p2 = eq_rel(phi.inverse(phi_t), tv, rel_tol);
    // Near a(Φ) the doubles around Φ^{-1}(u) are too coarse to hit u to rel_tol,
    // so P3 also accepts u bracketed by Φ at Φ^{-1}(u) and at the next double.
    if (bijective_class)
      s.p3 = eq_rel(phi(inv_t), tv, rel_tol) ||
             (le_rel(phi(inv_t), tv, rel_tol) && tv <= phi(std::nextafter(inv_t, kInf)) * (1.0 + rel_tol));
    rep.all_hold = rep.all_hold && s.p1 && s.p2.value_or(true) && s.p3.value_or(true);
    rep.samples.push_back(s);
  }
  return rep;
}

YoungFunction barrier_y2(double b, double delta) {
  require(std::isfinite(b) && b > 0.0, "barrier: b must be finite and > 0");
  require(delta > 0.0 && delta < 1.0, "barrier: delta must lie in (0, 1)");
  return YoungFunction::piecewise_linear({{0.0, 0.0}, {delta * b, 0.0}},
                                         BoundedTail{b, ExtReal::infinity(), 1.0});
}

YoungFunction envelope_y2(const YoungFunction& phi, double delta) {
  if (phi.classify() != YoungClass::Y3)
    throw std::invalid_argument("envelope_y2: input must be in class Y3");
  return YoungFunction::sum(phi, barrier_y2(phi.b(), delta));
}

ConvexityReport convexity_audit(const YoungFunction& phi, std::span<const double> grid) {
  ConvexityReport rep;
  const double b = phi.b();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double s = grid[i];
    if (!(s >= 0.0 && s < b)) continue;
    const double fs = phi(s);
    if (fs == kInf) continue;
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double t = grid[j];
      if (!(t >= 0.0 && t < b)) continue;
      const double ft = phi(t);
      if (ft == kInf) continue;
      ++rep.pairs_checked;
      const double mid = phi(s + (t - s) / 2);
      const double chord = (fs + ft) / 2;
      const double excess = mid - chord - 1e-12 * (1.0 + std::abs(fs) + std::abs(ft));
      if (excess > 0.0) {
        ++rep.violations;
        rep.worst_excess = std::max(rep.worst_excess, mid - chord);
      }
    }
  }
  rep.pass = rep.violations == 0;
  return rep;
}

}  // namespace orlicz
