#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "orlicz/xreal.hpp"

namespace orlicz {

enum class YoungClass { Y1, Y2, Y3 };

std::string to_string(YoungClass c);

struct Breakpoint {
  double t = 0.0;
  double y = 0.0;
};

/// Linear continuation with the given slope to infinity.
struct SlopeTail {
  double slope = 0.0;
};

/// Φ is finite on [0, b) and ∞ on (b, ∞].
///
/// With finite phi_b the last piece is the chord from the final breakpoint to
/// (b, phi_b). With phi_b = ∞ the last piece is the barrier
///   y_n + kappa * (t - t_n) / (b - t),
/// which blows up at b. kappa defaults to the value that makes the derivative
/// continuous at t_n.
struct BoundedTail {
  double b = 0.0;
  ExtReal phi_b;
  std::optional<double> kappa;
};

using Tail = std::variant<SlopeTail, BoundedTail>;

class YoungFunction;

namespace family {

struct Power {
  double p;
};

/// t^p * max(1, log t)^q
struct PowerLog {
  double p;
  double q;
};

/// exp(t^p) - 1
struct ExpPower {
  double p;
};

/// 0 on [0, 1], ∞ on (1, ∞].
struct LinfIndicator {};

struct PiecewiseLinear {
  std::vector<Breakpoint> breakpoints;
  Tail tail;
  // Derived at construction.
  std::vector<double> slopes;  // one per segment between consecutive breakpoints
  double tail_slope = 0.0;     // SlopeTail slope, or chord slope of a finite BoundedTail
  double kappa = 0.0;          // barrier coefficient when phi_b = ∞
};

struct Sum;
struct ArgScale;

}  // namespace family

struct Endpoints {
  ExtReal a;
  ExtReal b;
};

/// Immutable handle to a Young function descriptor.
///
/// Copies share the underlying descriptor. Endpoints and class are computed
/// once at construction.
class YoungFunction {
 public:
  struct Node;

  static YoungFunction power(double p);
  static YoungFunction power_log(double p, double q);
  static YoungFunction exp_power(double p);
  static YoungFunction linf_indicator();
  static YoungFunction piecewise_linear(std::vector<Breakpoint> breakpoints, Tail tail);
  /// Structural checks only; slopes may decrease. Used to build convexity-audit
  /// counterexamples.
  static YoungFunction piecewise_linear_unvalidated(std::vector<Breakpoint> breakpoints, Tail tail);
  static YoungFunction sum(YoungFunction lhs, YoungFunction rhs);
  /// t -> inner(c t), c > 0.
  static YoungFunction arg_scale(YoungFunction inner, double c);

  /// Φ(t) for t in [0, +inf]; returns +inf where Φ is infinite.
  double operator()(double t) const;
  ExtReal evaluate(ExtReal t) const { return ExtReal((*this)(t.value())); }

  /// Generalized inverse inf{t >= 0 : Φ(t) > u}, with Φ^{-1}(∞) = ∞.
  double inverse(double u) const;
  ExtReal inverse(ExtReal u) const { return ExtReal(inverse(u.value())); }

  /// Same as inverse on [0, ∞); at ∞ returns lim_{u→∞} Φ^{-1}(u) = b(Φ).
  ExtReal inverse_alt(ExtReal u) const;

  double a() const;
  double b() const;
  Endpoints endpoints() const { return {ExtReal(a()), ExtReal(b())}; }
  YoungClass classify() const;

  bool is_piecewise_linear() const;
  const family::PiecewiseLinear* as_piecewise_linear() const;

  const Node& node() const { return *node_; }

  std::string describe() const;

 private:
  explicit YoungFunction(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

namespace family {

struct Sum {
  YoungFunction lhs;
  YoungFunction rhs;
};

struct ArgScale {
  YoungFunction inner;
  double c;
};

}  // namespace family

using Descriptor = std::variant<family::Power, family::PowerLog, family::ExpPower,
                                family::LinfIndicator, family::PiecewiseLinear, family::Sum,
                                family::ArgScale>;

struct YoungFunction::Node {
  Descriptor descriptor;
  double a = 0.0;
  double b = kInf;
  YoungClass cls = YoungClass::Y1;
};

// Free-function spelling of the core operations.

inline ExtReal evaluate(const YoungFunction& phi, ExtReal t) { return phi.evaluate(t); }
inline Endpoints endpoints(const YoungFunction& phi) { return phi.endpoints(); }
inline YoungClass classify(const YoungFunction& phi) { return phi.classify(); }
inline ExtReal inverse(const YoungFunction& phi, ExtReal u) { return phi.inverse(u); }
inline ExtReal inverse_alt(const YoungFunction& phi, ExtReal u) { return phi.inverse_alt(u); }

/// Φ(c-) for c > 0. Young functions are left-continuous on (0, ∞], so this
/// equals Φ(c); kept separate so callers read as the sup over [c', c).
inline double left_limit(const YoungFunction& phi, double c) { return phi(c); }

struct InversePropertySample {
  ExtReal t;
  bool p1 = true;
  std::optional<bool> p2;  // only when Φ(t) ∈ (0, ∞)
  std::optional<bool> p3;  // only for Y1 ∪ Y2
};

struct InversePropertyReport {
  std::vector<InversePropertySample> samples;
  bool all_hold = true;
};

/// Checks (P1), (P2) and, for Y1 ∪ Y2, (P3) at each sample with a relative
/// tolerance for rounding in the inverse.
InversePropertyReport check_p1_p2_p3(const YoungFunction& phi, std::span<const ExtReal> samples,
                                     double rel_tol = 1e-12);

/// Y2 envelope Ψ = Φ + Θ of a Y3 function, with Θ(t) = (t - δb)/(b - t) on
/// (δb, b). Satisfies Ψ(δt) <= Φ(t) <= Ψ(t) and b(Ψ) = b(Φ).
YoungFunction envelope_y2(const YoungFunction& phi, double delta);

/// The barrier Θ used by envelope_y2.
YoungFunction barrier_y2(double b, double delta);

struct ConvexityReport {
  std::size_t pairs_checked = 0;
  std::size_t violations = 0;
  double worst_excess = 0.0;
  bool pass = true;
};

/// Midpoint convexity Φ((s+t)/2) <= (Φ(s)+Φ(t))/2 over all grid pairs in
/// [0, b(Φ)) with finite values, additive tolerance 1e-12 (1 + |Φ(s)| + |Φ(t)|).
ConvexityReport convexity_audit(const YoungFunction& phi, std::span<const double> grid);

}  // namespace orlicz
