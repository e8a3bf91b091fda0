#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace orlicz {

/// Counter-based generator: output i is the SplitMix64 finalizer applied to
/// key + i * golden-gamma. Any (key, counter) pair addresses one value, so
/// per-case streams never depend on scheduling order.
class CounterRng {
 public:
  static constexpr std::string_view kAlgorithm = "splitmix64-ctr-v1";

  explicit CounterRng(std::uint64_t key, std::uint64_t counter = 0) : key_(key), counter_(counter) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

  /// Uniform integer in [lo, hi].
  int range(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

/// Sub-seed for (seed, a, b), e.g. (campaign seed, case index, check id).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t k = CounterRng::mix(seed ^ 0x6a09e667f3bcc909ULL);
  k = CounterRng::mix(k ^ (a * 0x9e3779b97f4a7c15ULL + 0xbb67ae8584caa73bULL));
  k = CounterRng::mix(k ^ (b * 0xc2b2ae3d27d4eb4fULL + 0x3c6ef372fe94f82bULL));
  return k;
}

}  // namespace orlicz
