#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "orlicz/rng.hpp"
#include "orlicz/xreal.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

YoungFunction shifted_identity() {
  return YoungFunction::piecewise_linear({{0, 0}, {1, 0}}, SlopeTail{1.0});
}

}  // namespace

TEST_CASE("ExtReal arithmetic conventions") {
  const ExtReal inf = ExtReal::infinity();
  CHECK(mul(inf, 0.0) == ExtReal(0.0));
  CHECK(mul(0.0, inf) == ExtReal(0.0));
  CHECK(mul(inf, 0.5).is_inf());
  CHECK(mul(2.0, 3.0) == ExtReal(6.0));
  CHECK(add(inf, 1.0).is_inf());
  CHECK(div_by_finite_positive(inf, 2.0).is_inf());
  CHECK(cmp(3.0, inf) == std::strong_ordering::less);
  CHECK_THROWS_AS(ExtReal(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(ExtReal(-1.0), std::domain_error);
  CHECK_THROWS_AS(div_by_finite_positive(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(div_by_finite_positive(1.0, kInf), std::domain_error);
}

TEST_CASE("ExtReal mul is commutative, associative, monotone, with 0 and 1 laws") {
  CounterRng rng(11);
  auto draw = [&] {
    double u = rng.uniform01();
    if (u < 0.15) return ExtReal::zero();
    if (u < 0.3) return ExtReal::infinity();
    return ExtReal(rng.log_uniform(1e-3, 1e3));
  };
  for (int i = 0; i < 2000; ++i) {
    ExtReal x = draw(), y = draw(), z = draw();
    CHECK(mul(x, y) == mul(y, x));
    const ExtReal left = mul(mul(x, y), z), right = mul(x, mul(y, z));
    if (left.is_inf() || right.is_inf())
      CHECK(left == right);
    else
      CHECK(left.value() == doctest::Approx(right.value()).epsilon(1e-14));
    CHECK(mul(x, 0.0) == ExtReal::zero());
    CHECK(mul(x, 1.0) == x);
    if (y <= z) CHECK(mul(x, y) <= mul(x, z));
  }
}

TEST_CASE("evaluate examples") {
  CHECK(YoungFunction::power(2)(3.0) == 9.0);
  CHECK(YoungFunction::linf_indicator()(1.0) == 0.0);
  CHECK(std::isinf(YoungFunction::linf_indicator()(1.5)));
  CHECK(shifted_identity()(3.0) == 2.0);
  CHECK(oracle::pl({{0, 0}, {1, 0}}, 1.0)(3.0) == 2.0);
  for (const auto& phi : {YoungFunction::power(2), YoungFunction::exp_power(1), shifted_identity(),
                          YoungFunction::linf_indicator()})
    CHECK(std::isinf(phi(kInf)));
}

TEST_CASE("endpoints and classes") {
  auto [a, b] = YoungFunction::power(2).endpoints();
  CHECK(a == ExtReal(0.0));
  CHECK(b.is_inf());
  CHECK(YoungFunction::linf_indicator().a() == 1.0);
  CHECK(YoungFunction::linf_indicator().b() == 1.0);
  CHECK(shifted_identity().a() == 1.0);
  CHECK(std::isinf(shifted_identity().b()));

  CHECK(YoungFunction::power(2).classify() == YoungClass::Y1);
  CHECK(YoungFunction::linf_indicator().classify() == YoungClass::Y3);
  auto y2 = YoungFunction::piecewise_linear({{0, 0}, {1, 1}}, BoundedTail{2.0, ExtReal::infinity(), {}});
  CHECK(y2.classify() == YoungClass::Y2);
  CHECK(y2.b() == 2.0);

  auto sum = YoungFunction::sum(YoungFunction::linf_indicator(), shifted_identity());
  CHECK(sum.a() == 1.0);
  CHECK(sum.b() == 1.0);
  auto scaled = YoungFunction::arg_scale(YoungFunction::linf_indicator(), 4.0);
  CHECK(scaled.a() == 0.25);
  CHECK(scaled.b() == 0.25);
}

TEST_CASE("inverse examples") {
  const auto linf = YoungFunction::linf_indicator();
  for (double u : {0.0, 0.5, 1.0, 1e9}) CHECK(linf.inverse(u) == 1.0);
  CHECK(YoungFunction::power(2).inverse(9.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(shifted_identity().inverse(0.0) == 1.0);
  CHECK(shifted_identity().inverse(2.0) == 3.0);
  CHECK(oracle::inverse(oracle::pl({{0, 0}, {1, 0}}, 1.0), 0.0) == doctest::Approx(1.0));
  CHECK(oracle::inverse(oracle::pl({{0, 0}, {1, 0}}, 1.0), 2.0) == doctest::Approx(3.0));
  CHECK(YoungFunction::power(2).inverse(ExtReal::infinity()).is_inf());
  CHECK(linf.inverse(ExtReal::infinity()).is_inf());
}

TEST_CASE("inverse_alt examples") {
  CHECK(YoungFunction::linf_indicator().inverse_alt(ExtReal::infinity()) == ExtReal(1.0));
  CHECK(YoungFunction::power(2).inverse_alt(ExtReal::infinity()).is_inf());
  CHECK(YoungFunction::power(2).inverse_alt(4.0).value() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("P1 P2 P3 examples") {
  std::vector<ExtReal> three{3.0};
  auto r = check_p1_p2_p3(YoungFunction::power(2), three);
  CHECK(r.all_hold);
  CHECK(YoungFunction::power(2).inverse(YoungFunction::power(2)(3.0)) == doctest::Approx(3.0).epsilon(1e-15));

  std::vector<ExtReal> half{0.5};
  auto linf = YoungFunction::linf_indicator();
  CHECK(check_p1_p2_p3(linf, half).all_hold);
  CHECK(linf(linf.inverse(0.5)) == 0.0);
  CHECK(linf.inverse(linf(0.5)) == 1.0);
  CHECK(check_p1_p2_p3(linf, half).samples[0].p3.has_value() == false);

  auto e = YoungFunction::exp_power(1);
  const double u = std::exp(1.0) - 1.0;
  CHECK(e.inverse(u) == doctest::Approx(std::log1p(u)).epsilon(1e-14));
  CHECK(e(e.inverse(u)) == doctest::Approx(u).epsilon(1e-12));
}

TEST_CASE("envelope of the L-infinity indicator") {
  auto linf = YoungFunction::linf_indicator();
  auto psi = envelope_y2(linf, 0.5);
  CHECK(psi.classify() == YoungClass::Y2);
  CHECK(psi.b() == 1.0);
  CHECK(psi.a() == 0.5);
  CHECK(psi(0.5) == 0.0);
  CHECK(psi(0.75) == doctest::Approx(0.25 / 0.25));
  CHECK(std::isinf(psi(1.0)));
  for (double t : {0.4, 0.9, 1.0, 2.0}) {
    CHECK(psi(t / 2) <= linf(t));
    CHECK(linf(t) <= psi(t));
  }
  CHECK_THROWS_AS(envelope_y2(YoungFunction::power(2), 0.5), std::invalid_argument);
}

TEST_CASE("convexity audit examples") {
  std::vector<double> grid{0, 1, 2, 4};
  CHECK(convexity_audit(YoungFunction::power(2), grid).pass);
  auto concave = YoungFunction::piecewise_linear_unvalidated({{0, 0}, {1, 2}, {2, 3}}, SlopeTail{0.5});
  CHECK_FALSE(convexity_audit(concave, grid).pass);
  std::vector<double> log_grid;
  for (int i = 0; i <= 60; ++i) log_grid.push_back(std::pow(10.0, -3.0 + i * 0.1));
  CHECK(convexity_audit(YoungFunction::sum(YoungFunction::power(2), YoungFunction::exp_power(1)), log_grid).pass);
  CHECK_THROWS_AS(YoungFunction::piecewise_linear({{0, 0}, {1, 2}, {2, 3}}, SlopeTail{0.5}), std::invalid_argument);
}

TEST_CASE("PL inverse agrees with a bisection oracle") {
  auto pts = std::vector<std::pair<double, double>>{{0, 0}, {0.5, 0}, {1.5, 0.25}, {2, 1}};
  auto ref = oracle::pl(pts, 3.0);
  auto phi = YoungFunction::piecewise_linear({{0, 0}, {0.5, 0}, {1.5, 0.25}, {2, 1}}, SlopeTail{3.0});
  for (double u : {0.0, 1e-6, 0.1, 0.25, 0.5, 1.0, 7.0, 1e4}) {
    CHECK(phi.inverse(u) == doctest::Approx(oracle::inverse(ref, u)).epsilon(1e-12));
    CHECK(phi(phi.inverse(u)) <= u);
  }
}
