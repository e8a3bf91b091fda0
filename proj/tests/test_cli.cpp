#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orlicz/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "orlicz_kit");
  std::ostringstream out, err;
  int code = orlicz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTwoAtom = R"({"atoms":[{"weight":1,"value":2},{"weight":1,"value":1}]})";
const std::string kPower1 = R"({"family":"power","p":1})";

std::filesystem::path temp_dir() {
  auto p = std::filesystem::temp_directory_path() / "orlicz_kit_cli_test";
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("norm command") {
  auto w = run({"norm", "--young", kPower1, "--data", kTwoAtom, "--kind", "weak", "--json"});
  REQUIRE(w.code == 0);
  json j = json::parse(w.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "norm");
  CHECK(j["result"]["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));

  auto l = run({"--json", "norm", "--young", kPower1, "--data", kTwoAtom, "--kind", "lux"});
  REQUIRE(l.code == 0);
  CHECK(json::parse(l.out)["result"]["value"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));

  auto cf = run({"norm", "--young", kPower1, "--data", kTwoAtom, "--method", "closed-form", "--json"});
  REQUIRE(cf.code == 0);
  CHECK(json::parse(cf.out)["result"]["method"] == "closed-form");

  auto bad = run({"norm", "--young", "{\"family\":", "--data", kTwoAtom});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("young") != std::string::npos);

  auto bad_data = run({"norm", "--young", kPower1, "--data", R"({"atoms":[{"weight":-1,"value":1}]})"});
  CHECK(bad_data.code == 2);
  CHECK(bad_data.err.find("data") != std::string::npos);
}

TEST_CASE("norm reads CSV files") {
  auto path = temp_dir() / "two.csv";
  std::ofstream(path) << "weight,value\n1,2\n1,1\n";
  auto r = run({"norm", "--young", kPower1, "--data", path.string(), "--json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(run({"norm", "--young", kPower1, "--data", (temp_dir() / "missing.json").string()}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"norm", "--young", kPower1}).code == 2);
  CHECK(run({"norm", "--young", kPower1, "--data", kTwoAtom, "--kind", "strong"}).code == 2);
}

TEST_CASE("inverse command") {
  auto pl = R"({"family":"pl","breakpoints":[[0,0],[1,0]],"tail":{"slope":1}})";
  auto r = run({"inverse", "--young", pl, "--u", "2", "--json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"] == 3.0);
  auto inf = run({"inverse", "--young", R"({"family":"linf"})", "--u", "inf", "--json"});
  CHECK(json::parse(inf.out)["value"] == "inf");
  auto alt = run({"inverse", "--young", R"({"family":"linf"})", "--u", "inf", "--alt", "--json"});
  CHECK(json::parse(alt.out)["value"] == 1.0);
  CHECK(run({"inverse", "--young", pl, "--u", "-1"}).code == 2);
}

TEST_CASE("equiv-check command") {
  auto r = run({"equiv-check", "--young", kPower1, "--data", kTwoAtom, "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["form1"].get<double>() == doctest::Approx(2.0));
  CHECK(j["form2"].get<double>() == doctest::Approx(2.0));
  CHECK(j["form3"].get<double>() == doctest::Approx(2.0));
  auto linf = run({"equiv-check", "--young", R"({"family":"linf"})", "--data", kTwoAtom, "--json"});
  REQUIRE(linf.code == 0);
  CHECK(json::parse(linf.out)["form1"] == "inf");
  CHECK(json::parse(linf.out)["form3"] == "inf");
}

TEST_CASE("constants command") {
  auto ok = run({"constants", "--phi1", R"({"family":"power","p":2})", "--phi2", kPower1, "--phi3",
                 R"({"family":"power","p":2})", "--json"});
  REQUIRE(ok.code == 0);
  CHECK(json::parse(ok.out)["constants"]["c_upper"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  auto p2 = R"({"family":"power","p":2})";
  auto bad = run({"constants", "--phi1", p2, "--phi2", p2, "--phi3", p2});
  CHECK(bad.code == 1);
  auto path = (temp_dir() / "ratios.csv").string();
  auto csv = run({"constants", "--phi1", p2, "--phi2", kPower1, "--phi3", p2, "--count", "5", "--csv", path});
  CHECK(csv.code == 0);
  std::stringstream text;
  text << std::ifstream(path).rdbuf();
  CHECK(text.str().rfind("u,upper_ratio,lower_ratio\n", 0) == 0);
}

TEST_CASE("holder, witness and pwm commands") {
  auto p2 = R"({"family":"power","p":2})";
  auto chi = R"({"atoms":[{"weight":1,"value":1}]})";
  auto h = run({"holder-check", "--phi1", p2, "--phi2", kPower1, "--phi3", p2, "--f", chi, "--g", chi, "--json"});
  REQUIRE(h.code == 0);
  CHECK(json::parse(h.out)["holds"] == true);

  auto g4 = R"({"atoms":[{"weight":4,"value":1}]})";
  auto w = run({"witness-check", "--phi1", p2, "--phi2", kPower1, "--phi3", p2, "--g", g4, "--json"});
  REQUIRE(w.code == 0);
  CHECK(json::parse(w.out)["norm_hg"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));

  auto s = run({"pwm-bound", "--phi1", p2, "--phi2", kPower1, "--phi3", p2, "--g", g4, "--budget", "100", "--json"});
  REQUIRE(s.code == 0);
  CHECK(json::parse(s.out)["pass"] == true);
}

TEST_CASE("examples command") {
  auto r = run({"examples", "--family", "powerlog", "--p", "2", "--q", "1", "--json"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["results"][0]["pass"] == true);
}

TEST_CASE("fuzz command") {
  auto none = run({"fuzz", "--seed", "1", "--cases", "1", "--checks", ""});
  CHECK(none.code == 2);
  CHECK(none.err.find("no checks selected") != std::string::npos);

  auto dir = temp_dir();
  auto a = (dir / "a.json").string(), b = (dir / "b.json").string();
  auto r1 = run({"fuzz", "--seed", "3", "--cases", "4", "--checks", "lattice,fatou,norms-equivalence", "--out", a});
  auto r2 = run({"fuzz", "--seed", "3", "--cases", "4", "--checks", "lattice,fatou,norms-equivalence", "--out", b,
                 "--serial"});
  REQUIRE(r1.code == 0);
  REQUIRE(r2.code == 0);
  std::stringstream sa, sb;
  sa << std::ifstream(a).rdbuf();
  sb << std::ifstream(b).rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(json::parse(sa.str())["checks"]["lattice"]["cases"] == 4);

  auto cfg = (dir / "cfg.json").string();
  std::ofstream(cfg) << R"({"seed":1,"cases":1})";
  auto from_cfg = run({"fuzz", "--config", cfg, "--out", (dir / "c.json").string()});
  CHECK(from_cfg.code == 0);
  std::ifstream golden(ORLICZ_GOLDEN_DIR "/seed1_cases1.json");
  std::ifstream produced(dir / "c.json");
  CHECK(json::parse(golden) == json::parse(produced));

  CHECK(run({"fuzz", "--checks", "nonsense"}).code == 2);
}
