#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "orlicz/multipliers.hpp"

using namespace orlicz;

namespace {

SimpleFunction fn(std::vector<double> w, std::vector<double> v) {
  return SimpleFunction(MeasureSpace(std::move(w)), std::move(v));
}

Triple power_triple(double p1, double p3) {
  return {YoungFunction::power(p1), YoungFunction::power(1.0 / (1.0 / p1 + 1.0 / p3)), YoungFunction::power(p3)};
}

}  // namespace

TEST_CASE("estimate_constants examples") {
  auto c = estimate_constants(power_triple(2, 2));
  CHECK(c.upper_bounded);
  CHECK(c.lower_bounded);
  CHECK(c.c_upper == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.c_lower == doctest::Approx(1.0).epsilon(1e-12));

  Triple diverging{YoungFunction::power(2), YoungFunction::power(2), YoungFunction::power(2)};
  auto d = estimate_constants(diverging);
  CHECK_FALSE(d.upper_bounded);
  CHECK_THROWS_AS(require_bounded(d), UnboundedOnGrid);

  Triple pl{YoungFunction::piecewise_linear({{0, 0}, {1, 1}}, SlopeTail{3}), YoungFunction::power(1.5),
            YoungFunction::exp_power(1)};
  auto e = estimate_constants(pl, LogGrid{2.0, 2.0, 2});
  CHECK(e.c_upper * e.c_lower >= 1.0 * (1 - 1e-15));
}

TEST_CASE("ratio conventions") {
  Triple linf{YoungFunction::linf_indicator(), YoungFunction::linf_indicator(), YoungFunction::linf_indicator()};
  CHECK(upper_ratio(linf, 3.0) == 1.0);
  Triple zero_den{YoungFunction::power(1), YoungFunction::piecewise_linear({{0, 0}, {1, 0}}, SlopeTail{1}),
                  YoungFunction::power(1)};
  auto r = lower_ratio(zero_den, 1.0);
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx(2.0));
}

TEST_CASE("holder_verify examples") {
  auto chi = fn({1}, {1});
  auto r = holder_verify(power_triple(2, 2), chi, chi, 1.0);
  CHECK(r.norm_fg == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.norm_f == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.norm_g == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.holds);
  CHECK(r.pointwise_holds);
  CHECK(r.assumption_holds);

  auto z = holder_verify(power_triple(2, 2), fn({1}, {0}), chi, 1.0);
  CHECK(z.norm_fg == 0.0);
  CHECK(z.rhs == 0.0);
  CHECK(z.holds);
}

TEST_CASE("witness example with closed-form indicator norms") {
  auto g = fn({4}, {1});
  auto r = witness(power_triple(2, 2), g, 1.0);
  CHECK(r.norm_g == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(oracle::weak_power(2, {4}, {1}) == 2.0);
  CHECK(r.h.value(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.norm_h == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.norm_hg == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(oracle::weak_power(1, {4}, {0.5}) == 2.0);
  CHECK(r.lower_bound == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.pass);

  auto one = witness(power_triple(3, 3), fn({0.7}, {5}), estimate_constants(power_triple(3, 3)).c_lower);
  CHECK(one.slack >= 0.0);
  CHECK(one.pass);

  CHECK_THROWS_AS(witness(power_triple(2, 2), fn({1}, {0}), 1.0), ZeroFunctionError);
  Triple y3{YoungFunction::power(1), YoungFunction::linf_indicator(), YoungFunction::power(1)};
  CHECK_THROWS_AS(witness(y3, g, 1.0), std::invalid_argument);
}

TEST_CASE("witness_y3 on L-infinity indicators") {
  auto linf = YoungFunction::linf_indicator();
  Triple t{linf, linf, linf};
  auto tc = estimate_constants(t);
  REQUIRE(tc.lower_bounded);
  CHECK(tc.c_lower == 1.0);
  auto g = fn({1, 2}, {3, 1});
  auto r = witness_y3(t, g, tc.c_lower, 0.9);
  CHECK(r.pass);
  CHECK(r.lower_bound <= 0.81 * r.norm_g / tc.c_lower * (1 + 1e-12));

  double prev = 0.0;
  for (double d : {0.3, 0.5, 0.7, 0.9, 0.99}) {
    auto w = witness_y3(t, g, tc.c_lower, d);
    CHECK(w.pass);
    CHECK(w.lower_bound >= prev);
    prev = w.lower_bound;
  }
  CHECK_THROWS_AS(witness_y3(power_triple(2, 2), g, 1.0, 0.9), std::invalid_argument);
}

TEST_CASE("pwm_bruteforce examples") {
  auto p1 = YoungFunction::power(1);
  auto g = fn({1, 2, 0.5}, {1.5, 1.5, 1.5});
  auto e = pwm_bruteforce(p1, p1, g, 300);
  CHECK(e.estimate >= 1.5 * (1 - 1e-6));
  CHECK(e.estimate <= 1.5 * (1 + 1e-12));
  CHECK(e.evaluations <= 300);
  CHECK(pwm_bruteforce(p1, p1, fn({1, 1}, {0, 0}), 50).estimate == 0.0);

  auto a = pwm_bruteforce(YoungFunction::power(2), p1, fn({1, 3}, {2, 0.5}), 200, {}, 4);
  auto b = pwm_bruteforce(YoungFunction::power(2), p1, fn({1, 3}, {2, 0.5}), 200, {}, 4);
  CHECK(a.estimate == b.estimate);
  CHECK(a.best_f == b.best_f);
  CHECK_THROWS_AS(pwm_bruteforce(p1, p1, fn({1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}), 10), std::invalid_argument);
}

TEST_CASE("sandwich examples") {
  auto g = fn({3}, {1});
  auto r = sandwich_audit(power_triple(2, 2), g, LogGrid{}, 200);
  CHECK(r.constants.c_upper == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.pass);
  CHECK(r.lower_ok);
  CHECK(r.upper_ok);

  // Matched log exponents: 1/2 + 1/4 = 3/4 and q1/p1 + q3/p3 = 1/2 + 1/4 = q2/p2.
  Triple pl{YoungFunction::power_log(2, 1), YoungFunction::power_log(4.0 / 3, 1), YoungFunction::power_log(4, 1)};
  auto c = estimate_constants(pl);
  CHECK(c.upper_bounded);
  CHECK(c.lower_bounded);
  CHECK(sandwich_audit(pl, fn({1, 2}, {3, 0.7}), LogGrid{}, 200).pass);

  Triple ex{YoungFunction::exp_power(2), YoungFunction::exp_power(1), YoungFunction::exp_power(2)};
  CHECK(sandwich_audit(ex, fn({0.5, 2, 1}, {1.2, 0.4, 2.5}), LogGrid{}, 200).pass);
}

TEST_CASE("pwm ratio is scale invariant in f") {
  auto phi1 = YoungFunction::power(3);
  auto phi2 = YoungFunction::power(1.5);
  auto g = fn({1, 2}, {1.3, 0.4});
  auto f = fn({1, 2}, {0.2, 0.9});
  auto ratio = [&](const SimpleFunction& x) {
    std::vector<double> prod(2);
    for (std::size_t k = 0; k < 2; ++k) prod[k] = x.value(k) * g.value(k);
    return weak_norm(phi2, x.with_values(prod)).value.value() / weak_norm(phi1, x).value.value();
  };
  for (double c : {1e-3, 0.5, 7.0, 1e4}) CHECK(ratio(f.scaled(c)) == doctest::Approx(ratio(f)).epsilon(1e-12));
}

TEST_CASE("asymptotics examples") {
  auto p = example_asymptotics_audit(YoungFunction::power(2), 1e-6, 1e12);
  CHECK(p.k == doctest::Approx(1.0).epsilon(1e-12));
  auto pl = example_asymptotics_audit(YoungFunction::power_log(2, 1), 1e-6, 1e12);
  CHECK(pl.finite);
  CHECK(pl.pass);
  auto ex = example_asymptotics_audit(YoungFunction::exp_power(1), 1e-6, 1e12);
  CHECK(ex.pass);
  CHECK(YoungFunction::exp_power(1).inverse(10.0) == doctest::Approx(std::log(11.0)).epsilon(1e-14));
  CHECK_THROWS_AS(example_asymptotics_audit(YoungFunction::power(2), 1e-8, 1.0), std::invalid_argument);
}
