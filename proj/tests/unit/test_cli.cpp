#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wforge/mesh.hpp"
#include "wforge/report.hpp"
#include "wforge_cli/cli.hpp"

using namespace wforge;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir(const std::string& name) {
  const fs::path p = fs::path(WFORGE_TEST_TMP) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Json check_named(const Json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return c;
  return Json();
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--family", "r99", "--params", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--family", "r11", "--params", "0,1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--f", "z", "--g", "1/z"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"gen", "--family", "enneper", "--res", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"gen", "--family", "enneper", "--range", "1,0"}).code, cli::kExitUsage);
  const Result r = run_cli({"verify", "--family", "r11", "--params", "0,1"});
  EXPECT_NE(r.err.find("invalid-family"), std::string::npos) << r.err;
}

TEST(Cli, HelpExitsZero) {
  const Result r = run_cli({"--help"});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, VerifyEnneperPasses) {
  const Result r = run_cli({"verify", "--family", "enneper", "--json"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.out << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_TRUE(j["pass"].get<bool>());
  for (const char* name : {"structure", "isotropy", "harmonic", "isothermal", "degree5_system",
                           "minimality_scan", "chart_first_form", "chart_second_form", "chart_ode",
                           "ganchev_pde"}) {
    const Json c = check_named(j, name);
    ASSERT_FALSE(c.is_null()) << name;
    EXPECT_TRUE(c["pass"].get<bool>()) << name;
  }
  EXPECT_EQ(j["subject"]["structure"]["n"], 3);
}

TEST(Cli, VerifyFamiliesAndPairs) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--family", "r12", "--params", "1,0,1,1"},
        {"verify", "--family", "r3", "--params", "1,1,0"},
        {"verify", "--family", "xw5", "--params", "1,0,0,1"},
        {"verify", "--family", "xw", "--n", "6", "--omega", "2"},
        {"verify", "--f", "z^2", "--g", "z"}}) {
    const Result r = run_cli(args);
    EXPECT_EQ(r.code, cli::kExitPass) << args[2] << "\n" << r.out << r.err;
    EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
  }
}

TEST(Cli, VerifyOutputIsDeterministic) {
  const std::vector<std::string> args{"verify", "--family", "r11", "--params", "1,(0,1)", "--json"};
  const Result a = run_cli(args);
  const Result b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyCoefficientFile) {
  const fs::path dir = temp_dir("coeffs");
  {
    std::ofstream f(dir / "bad.json");
    f << R"({"a": [1, 0, 0], "b": [1, 0, 0]})";
  }
  const Result bad = run_cli({"verify", "--coeffs", (dir / "bad.json").string(), "--json"});
  EXPECT_EQ(bad.code, cli::kExitCheckFailed);
  const Json j = Json::parse(bad.out);
  EXPECT_FALSE(j["pass"].get<bool>());
  const Json c = check_named(j, "degree5_system");
  EXPECT_NE(c["detail"].get<std::string>().find("equation 2"), std::string::npos) << c.dump();
  {
    std::ofstream f(dir / "enneper.json");
    f << R"({"e": ["-1/6", 0, 0], "f": [0, "1/6", 0], "g": [0, 0, "1/2"],
            "i": ["1/2", 0, 0], "j": [0, "-1/2", 0]})";
  }
  EXPECT_EQ(run_cli({"verify", "--coeffs", (dir / "enneper.json").string()}).code, cli::kExitPass);
  {
    std::ofstream f(dir / "junk.json");
    f << R"({"z": [1, 2, 3]})";
  }
  EXPECT_EQ(run_cli({"verify", "--coeffs", (dir / "junk.json").string()}).code, cli::kExitUsage);
}

TEST(Cli, VerifyWritesReport) {
  const fs::path dir = temp_dir("report");
  const fs::path file = dir / "r.json";
  const Result r = run_cli({"verify", "--family", "r11", "--params", "1,0", "--report", file.string()});
  EXPECT_EQ(r.code, cli::kExitPass);
  std::ifstream in(file);
  const Json j = Json::parse(in);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, ToleranceScale) {
  setenv("WFORGE_TOL_SCALE", "abc", 1);
  EXPECT_EQ(run_cli({"verify", "--family", "enneper"}).code, cli::kExitUsage);
  setenv("WFORGE_TOL_SCALE", "0", 1);
  EXPECT_EQ(run_cli({"verify", "--family", "enneper"}).code, cli::kExitUsage);
  setenv("WFORGE_TOL_SCALE", "2", 1);
  const Result r = run_cli({"verify", "--family", "enneper", "--json"});
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_EQ(Json::parse(r.out)["tolerance_scale"], 2.0);
  unsetenv("WFORGE_TOL_SCALE");
}

TEST(Cli, GenWritesNamedFiles) {
  const fs::path dir = temp_dir("gen");
  const Result r = run_cli({"gen", "--family", "r12", "--params", "1,0,1,1", "--res", "81", "--out",
                            dir.string(), "--csv", "--json"});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["vertices"], 81 * 81);
  EXPECT_EQ(j["faces"], 2 * 80 * 80);
  EXPECT_TRUE(fs::exists(dir / "r12_1,0,1,1_81.obj"));
  EXPECT_TRUE(fs::exists(dir / "r12_1,0,1,1_81.csv"));
  const auto rows = read_csv(dir / "r12_1,0,1,1_81.csv");
  EXPECT_EQ(rows.size(), 81u * 81u);
}

TEST(Cli, GenExplicitPairAndRectangularGrid) {
  const fs::path dir = temp_dir("gen_pair");
  const Result r = run_cli({"gen", "--f", "1", "--g", "z", "--res", "5x3", "--out", dir.string()});
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  EXPECT_TRUE(fs::exists(dir / "pair_5x3.obj"));
}

TEST(Cli, CompareVerdicts) {
  const Result distinct = run_cli({"compare", "--a-family", "r12", "--a-params", "1,0,1,1",
                                   "--b-family", "r3", "--b-params", "1,1,0", "--json"});
  ASSERT_EQ(distinct.code, cli::kExitPass) << distinct.err;
  const Json d = Json::parse(distinct.out);
  EXPECT_EQ(d["verdict"], "distinct");
  EXPECT_EQ(d["predicate"]["value"], "1");

  const Result same = run_cli({"compare", "--a-family", "r12", "--a-params", "1,1,1,-1",
                               "--b-family", "r3", "--b-params", "1,0,-2", "--json"});
  ASSERT_EQ(same.code, cli::kExitPass) << same.err;
  const Json s = Json::parse(same.out);
  EXPECT_EQ(s["verdict"], "coincident");
  EXPECT_TRUE(s.contains("reduced_pair"));

  // The same reduced pair given explicitly.
  const Result pair = run_cli({"compare", "--a-family", "r12", "--a-params", "1,1,1,-1", "--b-f",
                               "z^2+2*z+1", "--b-g", "z-1", "--json"});
  EXPECT_EQ(Json::parse(pair.out)["verdict"], "coincident");

  // b^2c+d = 0, but r3[1,1,0] is not the reduced pair.
  const Result other = run_cli({"compare", "--a-family", "r12", "--a-params", "1,1,1,-1",
                                "--b-family", "r3", "--b-params", "1,1,0", "--json"});
  EXPECT_EQ(Json::parse(other.out)["verdict"], "undetermined");

  const Result text = run_cli({"compare", "--a-family", "r12", "--a-params", "1,0,1,1",
                               "--b-family", "r3", "--b-params", "1,1,0"});
  EXPECT_NE(text.out.find("distinct"), std::string::npos);

  const Result mirror = run_cli({"compare", "--a-family", "r11", "--a-params", "1,0", "--b-f", "z^4",
                                 "--b-g", "1/z^2", "--json"});
  EXPECT_EQ(Json::parse(mirror.out)["verdict"], "mirror-congruent");
}

TEST(Cli, FamiliesCatalog) {
  const Result r = run_cli({"families", "--json"});
  ASSERT_EQ(r.code, cli::kExitPass);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["families"].size(), 6u);
  EXPECT_NE(run_cli({"families"}).out.find("r12"), std::string::npos);
}
