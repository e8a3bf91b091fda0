// Times the OpenMP campaign runner against the serial reference and checks
// that both produce the same report.

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "orlicz/fuzz.hpp"

using namespace orlicz;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"campaign_bench"};
  fuzz::CampaignConfig cfg;
  std::int64_t cases = 200;
  std::uint64_t seed = 1;
  app.add_option("--cases", cases, "cases per check")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "campaign seed");
  CLI11_PARSE(app, argc, argv);
  cfg.cases = cases;
  cfg.seed = seed;

  fuzz::CampaignReport par, ser;
  const double tp = seconds([&] { par = fuzz::run_campaign(cfg); });
  const double ts = seconds([&] { ser = fuzz::run_campaign_serial(cfg); });
  const std::string jp = fuzz::to_json(par).dump(), js = fuzz::to_json(ser).dump();
  const bool same = jp == js;

  std::printf("cases/check=%lld checks=%zu threads=%d\n", static_cast<long long>(cases), cfg.checks.size(),
              omp_get_max_threads());
  std::printf("parallel %.3fs  serial %.3fs  speedup %.2fx\n", tp, ts, ts / tp);
  std::printf("reports identical: %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
