#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orlicz/xreal.hpp"

namespace orlicz {

class ZeroFunctionError : public std::domain_error {
 public:
  ZeroFunctionError() : std::domain_error("zero function") {}
};

/// Finite list of atoms with positive finite weights.
class MeasureSpace {
 public:
  explicit MeasureSpace(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  double weight(std::size_t k) const { return weights_[k]; }
  std::span<const double> weights() const { return weights_; }
  double total() const;

 private:
  std::vector<double> weights_;
};

/// One finite value per atom, stored as |value|.
class SimpleFunction {
 public:
  SimpleFunction(MeasureSpace space, std::vector<double> values);

  const MeasureSpace& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  double value(std::size_t k) const { return values_[k]; }
  std::span<const double> values() const { return values_; }

  double max_value() const;
  bool is_zero() const;

  SimpleFunction scaled(double c) const;
  /// Same space, new values.
  SimpleFunction with_values(std::vector<double> values) const;

 private:
  MeasureSpace space_;
  std::vector<double> values_;
};

/// Distinct positive levels c_1 < ... < c_N with merged masses and tail sums
/// T_j = sum_{k >= j} mass_k.
struct LayerForm {
  std::vector<double> levels;
  std::vector<double> masses;
  std::vector<double> tails;

  std::size_t size() const { return levels.size(); }
  double top() const { return levels.back(); }
};

/// Throws ZeroFunctionError when every value vanishes.
LayerForm canonicalize(const SimpleFunction& f);

/// μ({|f| > t}), strict inequality; 0 at t = ∞.
ExtReal distribution(const SimpleFunction& f, ExtReal t);
double distribution(const LayerForm& layers, double t);

/// Pointwise min(f, cap).
SimpleFunction truncate(const SimpleFunction& f, double cap);

/// Stages f_j = min(f, j max(f) / J), j = 1..J.
std::vector<SimpleFunction> monotone_stages(const SimpleFunction& f, int stages);

struct MonotoneLimitReport {
  std::vector<double> levels;                 // probe levels t
  std::vector<std::vector<double>> sequences;  // sequences[i][j] = μ(f_{j+1}, levels[i])
  std::vector<double> limits;                 // μ(f, levels[i])
  bool pass = true;
};

/// Checks μ(f_j, t) increases to μ(f, t) at 0, each level, and the midpoints
/// between levels.
MonotoneLimitReport monotone_limit_audit(const SimpleFunction& f, int stages);

/// h = factor_k * f_k atomwise, factors in [0, 1].
SimpleFunction lattice_pair(const SimpleFunction& f, std::span<const double> factors);

/// (h, f) with h = U_k f_k for seeded uniform factors U_k in [0, 1).
std::pair<SimpleFunction, SimpleFunction> lattice_pairs(const SimpleFunction& f, std::uint64_t seed);

}  // namespace orlicz
