#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>

namespace orlicz {

/// Nonnegative extended real number in [0, ∞].
///
/// Stored as a double where +inf stands for ∞. NaN and negative values are
/// rejected at construction, so the order is total. Multiplication follows the
/// measure-theoretic convention ∞·0 = 0·∞ = 0.
class ExtReal {
 public:
  constexpr ExtReal() = default;

  /* implicit */ ExtReal(double v) : v_(v) {
    if (std::isnan(v)) throw std::domain_error("ExtReal: NaN is not representable");
    if (v < 0.0) throw std::domain_error("ExtReal: negative value");
  }

  static constexpr ExtReal infinity() {
    ExtReal r;
    r.v_ = std::numeric_limits<double>::infinity();
    return r;
  }
  static constexpr ExtReal zero() { return ExtReal{}; }

  constexpr bool is_inf() const { return v_ == std::numeric_limits<double>::infinity(); }
  constexpr bool is_finite() const { return !is_inf(); }
  constexpr bool is_zero() const { return v_ == 0.0; }

  /// Underlying double; +inf when infinite.
  constexpr double value() const { return v_; }

  /// Finite value or throws.
  double finite_value() const {
    if (is_inf()) throw std::domain_error("ExtReal: value is infinite");
    return v_;
  }

  friend constexpr auto operator<=>(ExtReal a, ExtReal b) {
    // No NaN, so the partial order of double is total here.
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend constexpr bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }

 private:
  double v_ = 0.0;
};

inline ExtReal mul(ExtReal x, ExtReal y) {
  if (x.is_zero() || y.is_zero()) return ExtReal::zero();
  return ExtReal(x.value() * y.value());
}

inline ExtReal add(ExtReal x, ExtReal y) { return ExtReal(x.value() + y.value()); }

/// x / λ for finite λ > 0. ∞ / λ = ∞.
inline ExtReal div_by_finite_positive(ExtReal x, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::domain_error("div_by_finite_positive: divisor must be finite and > 0");
  return ExtReal(x.value() / lambda);
}

inline std::strong_ordering cmp(ExtReal x, ExtReal y) { return x <=> y; }

inline ExtReal operator*(ExtReal x, ExtReal y) { return mul(x, y); }
inline ExtReal operator+(ExtReal x, ExtReal y) { return add(x, y); }

inline ExtReal min(ExtReal x, ExtReal y) { return y < x ? y : x; }
inline ExtReal max(ExtReal x, ExtReal y) { return x < y ? y : x; }

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace orlicz
