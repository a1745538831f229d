#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hodge/cli.hpp"
#include "hodge/fixture_io.hpp"
#include "hodge/suites.hpp"

namespace hodge {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hodge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("hodge-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    for (const auto& name : catalog_names()) {
      FixtureFile f;
      f.fixture = catalog_fixture(name);
      std::ofstream(dir_ / (name + ".json")) << write_fixture(f);
    }
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }
  static std::string fixture(const std::string& name) { return path(name + ".json"); }
  static nlohmann::json load(const std::string& file) {
    std::ifstream in(file);
    return nlohmann::json::parse(in);
  }

  static fs::path dir_;
};

fs::path Cli::dir_;

TEST_F(Cli, DiamondOfFirstDegenerationHasEightSlots) {
  const auto report = path("diamond.json");
  const auto r = run({"diamond", fixture("g3-a1"), "--report", report});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("m = 4"), std::string::npos);
  const auto doc = load(report);
  EXPECT_EQ(doc["version"], kReportVersion);
  EXPECT_EQ(doc["data"]["m"], 4);
  EXPECT_EQ(doc["data"]["H"].size(), 8U);
}

TEST_F(Cli, EllipticMarkers) {
  const auto report = path("markers.json");
  const auto r = run({"markers", fixture("elliptic"), "--report", report});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = load(report);
  EXPECT_EQ(doc["data"]["m"], 2);
  EXPECT_EQ(doc["data"]["lambda"], nlohmann::json::array({"1", "0"}));
  EXPECT_EQ(doc["data"]["e0"], 0);
  EXPECT_EQ(doc["data"]["einf"], 1);
  EXPECT_EQ(doc["data"]["ed"], 1);
}

TEST_F(Cli, MonodromyWithShiftPasses) {
  const auto r = run({"check", fixture("g3-a1"), "--suite", "monodromy", "--shift", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("monodromy exact (3)"), std::string::npos);
  EXPECT_NE(r.out.find("2 checks, 0 failed"), std::string::npos);
}

TEST_F(Cli, EverySuitePassesOnEveryFixture) {
  for (const auto& name : catalog_names()) {
    const auto r = run({"check", fixture(name)});
    EXPECT_EQ(r.code, 0) << name << ": " << r.err;
  }
}

TEST_F(Cli, ReportsAreDeterministic) {
  const auto a = path("a.json");
  const auto b = path("b.json");
  ASSERT_EQ(run({"check", fixture("hd2-5-two"), "--seed", "7", "--report", a}).code, 0);
  ASSERT_EQ(run({"check", fixture("hd2-5-two"), "--seed", "7", "--report", b}).code, 0);
  std::ifstream ia(a);
  std::ifstream ib(b);
  std::stringstream sa;
  std::stringstream sb;
  sa << ia.rdbuf();
  sb << ib.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
}

TEST_F(Cli, LieVerdicts) {
  const auto report = path("lie.json");
  ASSERT_EQ(run({"lie", fixture("g3-a1"), "--report", report}).code, 0);
  EXPECT_TRUE(load(report)["data"]["hermitian"].get<bool>());
  ASSERT_EQ(run({"lie", fixture("hd2-1"), "--report", report}).code, 0);
  EXPECT_FALSE(load(report)["data"]["hermitian"].get<bool>());
  EXPECT_FALSE(load(report)["data"]["smooth"].get<bool>());
}

TEST_F(Cli, InduceThenCheck) {
  const auto out = path("elliptic-H.json");
  ASSERT_EQ(run({"induce", fixture("elliptic"), "-o", out}).code, 0);
  EXPECT_EQ(read_fixture_file(out).space, FixtureSpace::induced);
  EXPECT_EQ(run({"check", out}).code, 0);
  EXPECT_EQ(run({"lie", out}).code, 2);
}

TEST_F(Cli, EvalExactAndFloatAgree) {
  const auto exact = path("exact.json");
  const auto flt = path("float.json");
  ASSERT_EQ(run({"eval", fixture("elliptic"), "--t", "1/10", "1/5", "--ell", "1/3", "--report", exact}).code, 0);
  ASSERT_EQ(run({"eval", fixture("elliptic"), "--t", "0.1", "0.2", "--report", flt}).code, 0);
  EXPECT_EQ(load(exact)["data"]["mode"], "exact");
  EXPECT_DOUBLE_EQ(load(flt)["data"]["h_tilde"].get<double>(), 1.0);
}

TEST_F(Cli, Probes) {
  EXPECT_EQ(run({"probe", "radial", fixture("g3-a2-two")}).code, 0);
  EXPECT_EQ(run({"probe", "terms", fixture("hd2-1"), "--a", "1"}).code, 0);
  EXPECT_EQ(run({"probe", "levi", fixture("g3-a1")}).code, 0);
  EXPECT_EQ(run({"probe", "f-infinity", fixture("elliptic-squared")}).code, 0);
  EXPECT_EQ(run({"probe", "radial", fixture("g3-a1"), "--set", "2"}).code, 2);
  EXPECT_EQ(run({"probe", "sideways", fixture("g3-a1")}).code, 2);
}

TEST_F(Cli, InputErrorsExitWithTwo) {
  std::ofstream(path("bad.json")) << "{\n \"version\": 3,\n";
  const auto r = run({"diamond", path("bad.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line"), std::string::npos);
  EXPECT_EQ(run({"diamond", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"diamond"}).code, 2);
  EXPECT_EQ(run({"check", fixture("g3-a1"), "--suite", "lemma-m"}).code, 2);
  EXPECT_EQ(run({"check", fixture("g3-a1"), "--suite", "nonsense"}).code, 2);
  EXPECT_EQ(run({"eval", fixture("elliptic"), "--t", "0", "0.1"}).code, 2);
}

TEST_F(Cli, FailedCheckExitsWithOneAndNamesIt) {
  FixtureFile f;
  f.fixture = catalog_fixture("elliptic");
  f.markers = MarkerOverride{0, 0, 1};
  std::ofstream(path("override.json")) << write_fixture(f);
  const auto r = run({"markers", path("override.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Suites, NamesAndAvailability) {
  FixtureFile f;
  f.fixture = catalog_fixture("g3-a1");
  EXPECT_EQ(suite_names().size(), 7U);
  EXPECT_FALSE(suite_unavailable(f, "monodromy"));
  EXPECT_TRUE(suite_unavailable(f, "lemma-m"));
  EXPECT_THROW(run_suite(f, "lemma-m", SuiteOptions{}), Error);
  f.fixture = catalog_fixture("g3-a2-two");
  for (const auto& r : run_suite(f, "lemma-m", SuiteOptions{})) EXPECT_TRUE(r.pass) << r.claim << " " << r.detail;
}

TEST(Suites, SamplesAreSeeded) {
  const auto s = orbit_spec(FixtureFile{FixtureSpace::source, catalog_fixture("g3-a2-two"), std::nullopt});
  const auto a = float_samples(s, 5, 3);
  const auto b = float_samples(s, 5, 3);
  const auto c = float_samples(s, 5, 4);
  ASSERT_EQ(a.size(), 5U);
  EXPECT_EQ(a[2].t, b[2].t);
  EXPECT_NE(a[2].t, c[2].t);
  for (const auto& p : a) {
    for (std::size_t j = 0; j < s.k; ++j) {
      EXPECT_GE(std::abs(p.t[j]), 0.05);
      EXPECT_LE(std::abs(p.t[j]), 0.5);
    }
  }
}

}  // namespace
}  // namespace hodge
