#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "orlicz/measure.hpp"
#include "orlicz/multipliers.hpp"
#include "orlicz/rng.hpp"
#include "orlicz/young.hpp"

namespace orlicz::fuzz {

using nlohmann::json;

enum class Check {
  Holder,
  Witness,
  Sandwich,
  NormsEquivalence,
  Lattice,
  Fatou,
  QuasiTriangle,
  Normalization,
  Embedding,
  Homogeneity,
  LuxTriangle,
  MonotoneLimit,
};

inline constexpr std::array kAllChecks{
    Check::Holder,       Check::Witness,   Check::Sandwich,      Check::NormsEquivalence,
    Check::Lattice,      Check::Fatou,     Check::QuasiTriangle, Check::Normalization,
    Check::Embedding,    Check::Homogeneity, Check::LuxTriangle, Check::MonotoneLimit,
};

std::string to_string(Check c);
/// Throws std::invalid_argument on an unknown name.
Check check_from_string(const std::string& name);

struct CampaignConfig {
  std::uint64_t seed = 1;
  std::int64_t cases = 100;
  int max_atoms = 6;
  int max_segments = 8;
  std::array<double, 3> class_mix{0.4, 0.3, 0.3};  // Y1, Y2, Y3
  LogGrid u_grid;
  std::vector<Check> checks{kAllChecks.begin(), kAllChecks.end()};
  std::size_t sandwich_budget = 200;
  double delta = 0.9;

  /// Throws std::invalid_argument ("no checks selected", bad mix, ...).
  void validate() const;
};

json to_json(const CampaignConfig& c);
CampaignConfig config_from_json(const json& j);

// Generators. Each draws only from the given stream, so a fixed (key,
// counter) start reproduces the same object bitwise.

/// Random convex piecewise-linear Young function of the requested class.
YoungFunction gen_young(CounterRng& rng, const CampaignConfig& cfg, YoungClass cls, bool force_flat = false);
YoungClass gen_class(CounterRng& rng, const std::array<double, 3>& mix);
MeasureSpace gen_space(CounterRng& rng, int atoms);
/// Values log-uniform in [2^-6, 2^6]. With finite `b`, half the draws are
/// rescaled so max|f| lies in [b/4, 2b], a fifth of those exactly at b.
SimpleFunction gen_simple(CounterRng& rng, const MeasureSpace& space, double b = kInf);

enum class TripleMode { Power, PowerLog, ExpPower, Scaled, ScaledSymmetric };
std::string to_string(TripleMode m);

struct GeneratedTriple {
  Triple triple;
  TripleMode mode;
};

/// Triples whose inverse-product ratios are bounded by construction: matched
/// exponent families, or Φ2 = Φ1(·/b3) with bounded Φ3 (and the mirror image).
GeneratedTriple gen_triple(CounterRng& rng, const CampaignConfig& cfg);

struct CaseOutcome {
  bool pass = true;
  double slack = 0.0;  // margin to the asserted bound; negative on violation
  std::vector<std::string> tags;
  std::optional<json> record;  // full inputs and both sides, kept on failure
};

/// One check on one case. `reverify` recomputes norms through the closed form
/// route, used once on failures before a counterexample is recorded.
CaseOutcome run_case(const CampaignConfig& cfg, Check check, std::int64_t case_index, bool reverify = false);

struct CheckSummary {
  std::int64_t cases = 0;
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  double worst_slack = kInf;
  std::map<std::string, std::int64_t> tags;
};

struct CampaignReport {
  CampaignConfig config;
  std::map<std::string, CheckSummary> checks;
  std::vector<json> counterexamples;
  double wall_seconds = 0.0;  // not part of the serialized report

  bool all_passed() const;
};

inline constexpr std::string_view kRngAlgorithm = CounterRng::kAlgorithm;

/// Cases run in parallel (OpenMP; ORLICZ_KIT_THREADS caps the team size).
CampaignReport run_campaign(const CampaignConfig& cfg);
/// Serial reference with identical output.
CampaignReport run_campaign_serial(const CampaignConfig& cfg);

json to_json(const CampaignReport& r, bool include_timing = false);
/// Writes the report JSON to `path` and, when `corpus_dir` is nonempty, one
/// file per counterexample into it.
void write_report(const CampaignReport& r, const std::string& path, const std::string& corpus_dir = {},
                  bool include_timing = false);

}  // namespace orlicz::fuzz
