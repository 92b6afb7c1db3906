#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dunkl/config.hpp"
#include "dunkl/error.hpp"

using namespace dunkl;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Structural;  // nothing thrown
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("dunkl_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("yaml config") {
  const auto c = parse_config(R"(
group: {kind: z2, dim: 2, multiplicities: [0.5, 1]}
grid: {R: 8, N: 64}
potential: {preset: bump, params: {w: 1.5}}
suites: [plancherel, heat]
sweep: {t_list: [0.1, 1], q_list: [2, inf], kappa_list: []}
output: somewhere
seed: 42
)");
  CHECK(c.dim == 2);
  CHECK(c.multiplicities == std::vector<double>{0.5, 1.0});
  CHECK(c.N == 64);
  CHECK(c.potential == "bump");
  CHECK(c.potential_params.at("w") == 1.5);
  CHECK(c.suites == std::vector<std::string>{"plancherel", "heat"});
  CHECK(std::isinf(c.q_list[1]));
  CHECK(c.seed == 42);
}

TEST_CASE("json config") {
  const auto c = parse_config(R"({"group": {"dim": 1, "multiplicities": [1.5]}, "suites": ["heat"], "seed": 3})");
  CHECK(c.multiplicities[0] == 1.5);
  CHECK(c.suites.size() == 1);
}

TEST_CASE("malformed configs are input errors") {
  CHECK(kind_of("grid: {R: 8, N: 63}") == ErrorKind::Input);
  CHECK(kind_of("grid: {R: 8, N: 64, M: 2}") == ErrorKind::Input);
  CHECK(kind_of("colour: red") == ErrorKind::Input);
  CHECK(kind_of("suites: [no_such_suite]") == ErrorKind::Input);
  CHECK(kind_of("group: {multiplicities: [-0.5]}") == ErrorKind::Input);
  CHECK(kind_of("group: {dim: 2, multiplicities: [0.5, 1, 2]}") == ErrorKind::Input);
  CHECK(kind_of("potential: {preset: nope}") == ErrorKind::Input);
  CHECK(kind_of("grid: [") == ErrorKind::Input);
  CHECK(kind_of("sweep: {t_list: [abc]}") == ErrorKind::Input);
}

TEST_CASE("empty config runs nothing") {
  const auto c = parse_config("suites: []");
  CHECK(c.suites.empty());
  const auto dir = scratch("empty");
  write_reports(dir.string(), c, {}, false);
  const auto j = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(j["pass"] == true);
  CHECK(j["suites"].empty());
}

TEST_CASE("registry") {
  const auto& reg = suite_registry();
  CHECK(reg.size() >= 12);
  REQUIRE(find_suite("riesz_l2") != nullptr);
  REQUIRE(find_suite("kato_heat") != nullptr);
  CHECK(find_suite("riesz_l2")->anchor.find("Riesz") != std::string::npos);
  CHECK(find_suite("kato_heat")->anchor.find("heat") != std::string::npos);
  for (const auto& s : reg) {
    CHECK(!s.description.empty());
    CHECK(!s.anchor.empty());
  }
  CHECK(find_suite("nope") == nullptr);
}

TEST_CASE("same config and seed give identical files") {
  auto c = parse_config("grid: {R: 10, N: 64}\nsuites: [plancherel, ball_volume]\nseed: 9");
  std::vector<SuiteResult> a, b;
  for (const auto& s : c.suites) a.push_back(run_suite(s, c));
  for (const auto& s : c.suites) b.push_back(run_suite(s, c));
  const auto da = scratch("det_a"), db = scratch("det_b");
  write_reports(da.string(), c, a, false);
  write_reports(db.string(), c, b, false);
  for (const char* f : {"summary.json", "plancherel.csv", "ball_volume.csv"}) {
    CHECK(fs::exists(da / f));
    CHECK(slurp(da / f) == slurp(db / f));
  }
  const auto j = nlohmann::json::parse(slurp(da / "summary.json"));
  CHECK(j["suites"]["plancherel"]["anchor"] == find_suite("plancherel")->anchor);
}

TEST_CASE("plotdata") {
  auto c = parse_config("suites: [kato_modulus]\npotential: {preset: inverse_power, params: {beta: 0.5}}");
  const auto dir = scratch("plot");
  write_reports(dir.string(), c, {run_suite("kato_modulus", c)}, false);
  std::stringstream ss;
  plotdata(ss, dir.string(), "kato_modulus_vs_t");
  std::string header, line;
  std::getline(ss, header);
  CHECK(header.find("t") != std::string::npos);
  int rows = 0;
  while (std::getline(ss, line)) ++rows;
  CHECK(rows > 3);
  std::stringstream sink;
  try {
    plotdata(sink, dir.string(), "no_such_curve");
    FAIL("expected an input error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
  }
}

TEST_CASE("shipped configs parse") {
  for (const auto& e : fs::directory_iterator(fs::path(DUNKL_SOURCE_DIR) / "configs")) {
    const auto ext = e.path().extension();
    if (ext != ".yaml" && ext != ".json") continue;
    CAPTURE(e.path().string());
    CHECK_NOTHROW(load_config(e.path().string()));
  }
}

TEST_CASE("hard and soft checks") {
  SuiteResult r;
  r.check("a", 1.0, "<=", 2.0);
  r.check("b", 3.0, "<=", 2.0, false);
  CHECK(r.pass());
  CHECK_FALSE(r.pass(true));
  r.check("c", -1.0, ">=", 0.0);
  CHECK_FALSE(r.pass());
}
