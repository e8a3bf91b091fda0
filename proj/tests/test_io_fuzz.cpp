#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "orlicz/fuzz.hpp"
#include "orlicz/io.hpp"

using namespace orlicz;
using nlohmann::json;

TEST_CASE("ExtReal JSON") {
  CHECK(io::to_json(ExtReal::infinity()) == json("inf"));
  CHECK(io::to_json(ExtReal(2.5)) == json(2.5));
  CHECK(io::ext_from_json(json("inf"), "x").is_inf());
  CHECK(io::ext_from_json(json(3), "x") == ExtReal(3.0));
  CHECK_THROWS_AS(io::ext_from_json(json("nan"), "x"), io::InputError);
  CHECK_THROWS_AS(io::ext_from_json(json(-1), "x"), io::InputError);
}

TEST_CASE("Young descriptors round-trip through JSON") {
  const char* docs[] = {
      R"({"family":"power","p":2})",
      R"({"family":"powerlog","p":2,"q":1})",
      R"({"family":"exppower","p":1})",
      R"({"family":"linf"})",
      R"({"family":"pl","breakpoints":[[0,0],[1,0]],"tail":{"slope":1}})",
      R"({"family":"pl","breakpoints":[[0,0],[1,1]],"tail":{"b":2,"phi_b":"inf"}})",
      R"({"family":"pl","breakpoints":[[0,0],[1,1]],"tail":{"b":2,"phi_b":3}})",
      R"({"family":"sum","lhs":{"family":"power","p":2},"rhs":{"family":"linf"}})",
      R"({"family":"argscale","inner":{"family":"power","p":3},"c":0.5})",
  };
  for (const char* d : docs) {
    YoungFunction phi = io::young_from_json(json::parse(d));
    YoungFunction back = io::young_from_json(io::to_json(phi));
    CHECK(io::to_json(back) == io::to_json(phi));
    for (double t : {0.0, 0.3, 1.0, 1.7, 2.0, 5.0}) {
      double a = phi(t), b = back(t);
      CHECK((a == b || (std::isinf(a) && std::isinf(b))));
    }
  }
  CHECK(io::young_from_json(json::parse(docs[5])).classify() == YoungClass::Y2);
  CHECK(io::young_from_json(json::parse(docs[6])).classify() == YoungClass::Y3);
}

TEST_CASE("malformed Young descriptors name the field") {
  CHECK_THROWS_WITH_AS(io::young_from_json(json::parse(R"({"family":"nope"})")),
                       doctest::Contains("young"), io::InputError);
  CHECK_THROWS_AS(io::young_from_json(json::parse(R"({"family":"power","p":0.5})")), std::invalid_argument);
  CHECK_THROWS_WITH(io::load_json_arg("{not json", "young"), doctest::Contains("young: malformed JSON"));
  CHECK_THROWS_AS(io::young_from_json(json::parse(R"({"family":"pl","breakpoints":[[0,0],[1,2],[2,3]],"tail":{"slope":0.5}})")),
                  std::invalid_argument);
}

TEST_CASE("simple functions from JSON and CSV") {
  auto f = io::simple_from_json(json::parse(R"({"atoms":[{"weight":1,"value":2},{"weight":1,"value":-1}]})"));
  CHECK(f.size() == 2);
  CHECK(f.value(1) == 1.0);
  auto g = io::simple_from_json(io::to_json(f));
  CHECK(g.value(0) == 2.0);
  CHECK(g.space().weight(1) == 1.0);

  auto c = io::simple_from_csv("weight,value\n# comment\n\n1,2\n0.5,3\n");
  CHECK(c.size() == 2);
  CHECK(c.space().weight(1) == 0.5);
  CHECK(c.value(1) == 3.0);
  CHECK_THROWS_AS(io::simple_from_csv("1,2\n1\n"), io::InputError);
  CHECK_THROWS_AS(io::simple_from_json(json::parse(R"({"atoms":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(io::simple_from_json(json::parse(R"({"atoms":[{"weight":0,"value":1}]})")), std::invalid_argument);
}

TEST_CASE("NormResult JSON") {
  NormResult r{ExtReal(2.0), NormMethod::PredicateBisection, 0.0};
  json j = io::to_json(r);
  CHECK(j["value"] == 2.0);
  CHECK(j["method"] == "predicate-bisection");
  CHECK(j["residual"] == 0.0);
  r.residual.reset();
  CHECK(io::to_json(r)["residual"].is_null());
}

TEST_CASE("campaign config validation and JSON") {
  fuzz::CampaignConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.checks.clear();
  CHECK_THROWS_WITH(cfg.validate(), "no checks selected");
  cfg = {};
  cfg.class_mix = {0.5, 0.5, 0.5};
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.cases = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

  cfg = {};
  cfg.seed = 42;
  cfg.checks = {fuzz::Check::Fatou, fuzz::Check::Holder};
  auto back = fuzz::config_from_json(fuzz::to_json(cfg));
  CHECK(fuzz::to_json(back) == fuzz::to_json(cfg));
  for (auto c : fuzz::kAllChecks) CHECK(fuzz::check_from_string(fuzz::to_string(c)) == c);
  CHECK_THROWS_AS(fuzz::check_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("gen_young reproduces bitwise from a fixed stream") {
  fuzz::CampaignConfig cfg;
  for (std::uint64_t key = 0; key < 50; ++key) {
    CounterRng a(key), b(key);
    auto cls = fuzz::gen_class(a, cfg.class_mix);
    CHECK(fuzz::gen_class(b, cfg.class_mix) == cls);
    CHECK(io::to_json(fuzz::gen_young(a, cfg, cls)).dump() == io::to_json(fuzz::gen_young(b, cfg, cls)).dump());
  }
}

TEST_CASE("gen_young draws are valid Young functions of the requested class") {
  fuzz::CampaignConfig cfg;
  CounterRng rng(2024);
  int counts[3] = {0, 0, 0};
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    auto cls = fuzz::gen_class(rng, cfg.class_mix);
    auto phi = fuzz::gen_young(rng, cfg, cls);
    CHECK(phi.classify() == cls);
    ++counts[static_cast<int>(cls)];
    const auto* pl = phi.as_piecewise_linear();
    REQUIRE(pl != nullptr);
    CHECK(pl->breakpoints.size() <= static_cast<std::size_t>(cfg.max_segments) + 1);
    std::vector<double> grid;
    const double top = std::isfinite(phi.b()) ? phi.b() : 2.0 * pl->breakpoints.back().t + 1.0;
    for (int k = 0; k < 24; ++k) grid.push_back(top * k / 24.0);
    if (cls != YoungClass::Y2) grid.push_back(std::isfinite(phi.b()) ? phi.b() : top);
    if (!convexity_audit(phi, grid).pass) FAIL("convexity violated: " << io::to_json(phi).dump());
    CHECK(phi(0.0) == 0.0);
    if (std::isfinite(phi.b()) && cls == YoungClass::Y3)
      CHECK(phi(phi.b()) == doctest::Approx(phi(std::nextafter(phi.b(), 0.0))).epsilon(1e-9));
  }
  for (int c = 0; c < 3; ++c) {
    const double p = cfg.class_mix[c];
    const double sigma = std::sqrt(n * p * (1 - p));
    CHECK(std::abs(counts[c] - n * p) <= 3 * sigma);
  }
}

TEST_CASE("gen_simple: positivity, range and boundary coverage") {
  CounterRng rng(77);
  int boundary = 0;
  const int n = 2000;
  for (int i = 0; i < n; ++i) {
    auto space = fuzz::gen_space(rng, rng.range(1, 6));
    for (double w : space.weights()) CHECK((w >= 1.0 / 16 && w <= 16.0));
    auto f = fuzz::gen_simple(rng, space, 2.0);
    for (double v : f.values()) CHECK(v > 0.0);
    if (f.max_value() >= 2.0) ++boundary;
  }
  CHECK(boundary >= n / 4);
  CounterRng a(5), b(5);
  auto sa = fuzz::gen_space(a, 4), sb = fuzz::gen_space(b, 4);
  CHECK(io::to_json(fuzz::gen_simple(a, sa)) == io::to_json(fuzz::gen_simple(b, sb)));
}

TEST_CASE("campaigns are deterministic and serial equals parallel") {
  fuzz::CampaignConfig cfg;
  cfg.seed = 9;
  cfg.cases = 12;
  cfg.sandwich_budget = 60;
  auto a = fuzz::to_json(fuzz::run_campaign(cfg)).dump();
  auto b = fuzz::to_json(fuzz::run_campaign(cfg)).dump();
  auto s = fuzz::to_json(fuzz::run_campaign_serial(cfg)).dump();
  CHECK(a == b);
  CHECK(a == s);
  auto rep = fuzz::run_campaign_serial(cfg);
  CHECK(rep.all_passed());
  for (const auto& [name, sum] : rep.checks) CHECK(sum.pass + sum.fail == sum.cases);
  CHECK_FALSE(fuzz::to_json(rep).contains("wall_time_s"));
  CHECK(fuzz::to_json(rep, true).contains("wall_time_s"));
  CHECK(fuzz::to_json(rep)["rng"] == std::string(fuzz::kRngAlgorithm));
}

TEST_CASE("golden seed-1 single-case report") {
  std::ifstream in(ORLICZ_GOLDEN_DIR "/seed1_cases1.json");
  REQUIRE(in.good());
  json golden = json::parse(in);
  fuzz::CampaignConfig cfg;
  cfg.seed = 1;
  cfg.cases = 1;
  CHECK(fuzz::to_json(fuzz::run_campaign(cfg)) == golden);
}
