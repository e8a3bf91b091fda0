#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orlicz/measure.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

class UnboundedOnGrid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Log-spaced grid u_min * (u_max/u_min)^(i/(count-1)).
struct LogGrid {
  double u_min = 1e-9;
  double u_max = 1e9;
  int count = 2001;

  void validate() const;
  std::vector<double> points() const;
};

/// (Φ1, Φ2, Φ3): f in wL^Φ1, fg in wL^Φ2, multiplier g in wL^Φ3.
struct Triple {
  YoungFunction phi1;
  YoungFunction phi2;
  YoungFunction phi3;
};

/// Φ1^{-1}(u) Φ3^{-1}(u) / Φ2^{-1}(u); nullopt for 0/0, +inf for x/0.
std::optional<double> upper_ratio(const Triple& t, double u);
/// Reciprocal of upper_ratio with the same conventions.
std::optional<double> lower_ratio(const Triple& t, double u);

struct TripleConstant {
  double c_upper = 0.0;
  double c_lower = 0.0;
  LogGrid grid;
  double argmax_upper = 0.0;
  double argmax_lower = 0.0;
  bool upper_bounded = true;
  bool lower_bounded = true;
};

/// Grid sup of both ratios with local refinement around each argmax. A
/// direction is flagged unbounded when a ratio is infinite or overflows, or
/// when its sup sits on a grid edge and the ratio still grows by more than 10%
/// between far probes at 1e150 and 1e300 (1e-150 and 1e-300 below).
TripleConstant estimate_constants(const Triple& t, const LogGrid& grid = {});

/// Throws UnboundedOnGrid naming the offending direction.
void require_bounded(const TripleConstant& c);

/// Least C satisfying the upper inequality at the levels the Hölder argument
/// uses: u = max(Φ1(f/||f||), Φ3(g/||g||)) at each atom.
double required_upper_constant(const Triple& t, const SimpleFunction& f, const SimpleFunction& g, NormMethod route = NormMethod::PredicateBisection);

/// Least C satisfying the lower inequality at u = Φ3(g/||g||) at each atom.
double required_lower_constant(const Triple& t, const SimpleFunction& g, NormMethod route = NormMethod::PredicateBisection);

struct HolderReport {
  double norm_f = 0.0;
  double norm_g = 0.0;
  double norm_fg = 0.0;
  double constant = 0.0;
  double rhs = 0.0;  // 4 C ||f|| ||g||
  bool assumption_holds = true;
  bool holds = true;
  bool pointwise_holds = true;
  double worst_pointwise = 0.0;  // max over atoms of Φ2(fg/C..) / (Φ1 + Φ3)
  double slack = 0.0;            // rhs / ||fg|| - 1
};

/// `route` selects the norm engine: bisection, or the closed form used to
/// re-verify failing fuzz cases.
HolderReport holder_verify(const Triple& t, const SimpleFunction& f, const SimpleFunction& g, double c, NormMethod route = NormMethod::PredicateBisection);

struct WitnessReport {
  SimpleFunction h;
  double norm_g = 0.0;   // ||g|| in wL^Φ3
  double norm_h = 0.0;   // ||h|| in wL^Φ1
  double norm_hg = 0.0;  // ||hg|| in wL^Φ2
  double constant = 0.0;  // constant after validation at the case levels
  double delta = 1.0;
  double lower_bound = 0.0;
  double slack = 0.0;  // norm_hg / lower_bound - 1
  bool norm_h_ok = true;
  bool lower_ok = true;
  bool pointwise_p1_ok = true;
  bool pointwise_growth_ok = true;
  bool pass = true;
};

/// Extremal test function h = Φ1^{-1}(Φ3(|g| / ||g||)) for Φ2, Φ3 in Y1 ∪ Y2.
WitnessReport witness(const Triple& t, const SimpleFunction& g, double c, NormMethod route = NormMethod::PredicateBisection);

/// Y3 variant: each Y3 member of (Φ2, Φ3) is replaced by its Y2 envelope, the
/// witness is built with constant c/δ, and the δ²-degraded bound is checked
/// against the original functions.
WitnessReport witness_y3(const Triple& t, const SimpleFunction& g, double c, double delta, NormMethod route = NormMethod::PredicateBisection);

struct PwmEstimate {
  double estimate = 0.0;
  std::size_t evaluations = 0;
  std::vector<double> best_f;
};

/// Lower estimate of sup_{f != 0} ||fg||_{wΦ2} / ||f||_{wΦ1} on spaces with at
/// most four atoms: indicator seeds of every atom subset, caller seeds, then
/// coordinate pattern search and seeded random probes until the budget is used.
PwmEstimate pwm_bruteforce(const YoungFunction& phi1, const YoungFunction& phi2, const SimpleFunction& g,
                           std::size_t budget, std::span<const SimpleFunction> seeds = {},
                           std::uint64_t seed = 0);

struct SandwichReport {
  TripleConstant constants;
  double norm_g = 0.0;
  double c_lower_used = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double estimate = 0.0;
  bool lower_ok = true;
  bool upper_ok = true;
  bool pass = true;
};

SandwichReport sandwich_audit(const Triple& t, const SimpleFunction& g, const LogGrid& grid,
                              std::size_t budget, double delta = 0.9, NormMethod route = NormMethod::PredicateBisection);

/// Surrogate inverse used for comparison: u^{1/p} for Power,
/// u^{1/p} max(1, log u)^{-q/p} for PowerLog, and u^{1/p} / (log u)^{1/p}
/// split at u = 2 for ExpPower.
double surrogate_inverse(const YoungFunction& phi, double u);

struct AsymptoticsReport {
  double k = 0.0;
  double k_extended = 0.0;
  double relative_change = 0.0;
  bool finite = true;
  bool stable = true;
  bool pass = true;
  std::vector<std::pair<double, double>> table;  // (u, inverse / surrogate)
};

AsymptoticsReport example_asymptotics_audit(const YoungFunction& phi, double u_min, double u_max,
                                            int count = 2001);

}  // namespace orlicz
