#include "orlicz/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orlicz/rng.hpp"

namespace orlicz {

MeasureSpace::MeasureSpace(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("measure space: at least one atom required");
  for (double w : weights_)
    if (!(std::isfinite(w) && w > 0.0))
      throw std::invalid_argument("measure space: weights must be finite and > 0");
}

double MeasureSpace::total() const { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

SimpleFunction::SimpleFunction(MeasureSpace space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size())
    throw std::invalid_argument("simple function: one value per atom required");
  for (double& v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("simple function: values must be finite");
    v = std::abs(v);
  }
}

double SimpleFunction::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

bool SimpleFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

SimpleFunction SimpleFunction::scaled(double c) const {
  std::vector<double> v(values_);
  for (double& x : v) x *= c;
  return SimpleFunction(space_, std::move(v));
}

SimpleFunction SimpleFunction::with_values(std::vector<double> values) const {
  return SimpleFunction(space_, std::move(values));
}

LayerForm canonicalize(const SimpleFunction& f) {
  std::vector<std::pair<double, double>> atoms;  // (value, weight)
  atoms.reserve(f.size());
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f.value(k) > 0.0) atoms.emplace_back(f.value(k), f.space().weight(k));
  if (atoms.empty()) throw ZeroFunctionError();
  std::sort(atoms.begin(), atoms.end());

  LayerForm lf;
  for (const auto& [v, w] : atoms) {
    if (!lf.levels.empty() && lf.levels.back() == v) {
      lf.masses.back() += w;
    } else {
      lf.levels.push_back(v);
      lf.masses.push_back(w);
    }
  }
  lf.tails.resize(lf.masses.size());
  double acc = 0.0;
  for (std::size_t j = lf.masses.size(); j-- > 0;) {
    acc += lf.masses[j];
    lf.tails[j] = acc;
  }
  return lf;
}

double distribution(const LayerForm& layers, double t) {
  auto it = std::upper_bound(layers.levels.begin(), layers.levels.end(), t);
  if (it == layers.levels.end()) return 0.0;
  return layers.tails[static_cast<std::size_t>(it - layers.levels.begin())];
}

ExtReal distribution(const SimpleFunction& f, ExtReal t) {
  if (t.is_inf()) return ExtReal::zero();
  double mass = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f.value(k) > t.value()) mass += f.space().weight(k);
  return ExtReal(mass);
}

SimpleFunction truncate(const SimpleFunction& f, double cap) {
  std::vector<double> v(f.values().begin(), f.values().end());
  for (double& x : v) x = std::min(x, cap);
  return f.with_values(std::move(v));
}

std::vector<SimpleFunction> monotone_stages(const SimpleFunction& f, int stages) {
  if (stages < 1) throw std::invalid_argument("monotone stages: need at least one stage");
  const double top = f.max_value();
  std::vector<SimpleFunction> out;
  out.reserve(static_cast<std::size_t>(stages));
  for (int j = 1; j <= stages; ++j) {
    // The last cap is exactly max(f), so the final stage equals f.
    double cap = j == stages ? top : top * j / stages;
    out.push_back(truncate(f, cap));
  }
  return out;
}

MonotoneLimitReport monotone_limit_audit(const SimpleFunction& f, int stages) {
  if (stages < 2) throw std::invalid_argument("monotone_limit_audit: need at least two stages");
  MonotoneLimitReport rep;
  std::vector<double> vals(f.values().begin(), f.values().end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  rep.levels.push_back(0.0);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] > 0.0) rep.levels.push_back(vals[i]);
    if (i + 1 < vals.size()) rep.levels.push_back(vals[i] + (vals[i + 1] - vals[i]) / 2);
  }
  std::sort(rep.levels.begin(), rep.levels.end());
  rep.levels.erase(std::unique(rep.levels.begin(), rep.levels.end()), rep.levels.end());

  const auto fs = monotone_stages(f, stages);
  for (double t : rep.levels) {
    std::vector<double> seq;
    seq.reserve(fs.size());
    for (const auto& fj : fs) seq.push_back(distribution(fj, ExtReal(t)).value());
    const double lim = distribution(f, ExtReal(t)).value();
    bool ok = std::is_sorted(seq.begin(), seq.end()) && seq.back() == lim;
    rep.pass = rep.pass && ok;
    rep.sequences.push_back(std::move(seq));
    rep.limits.push_back(lim);
  }
  return rep;
}

SimpleFunction lattice_pair(const SimpleFunction& f, std::span<const double> factors) {
  if (factors.size() != f.size()) throw std::invalid_argument("lattice_pair: one factor per atom required");
  std::vector<double> v(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!(factors[k] >= 0.0 && factors[k] <= 1.0))
      throw std::invalid_argument("lattice_pair: factors must lie in [0, 1]");
    v[k] = factors[k] * f.value(k);
  }
  return f.with_values(std::move(v));
}

std::pair<SimpleFunction, SimpleFunction> lattice_pairs(const SimpleFunction& f, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<double> factors(f.size());
  for (double& u : factors) u = rng.uniform01();
  return {lattice_pair(f, factors), f};
}

}  // namespace orlicz
