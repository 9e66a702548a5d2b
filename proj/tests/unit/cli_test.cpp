#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "../../tools/cli.hpp"
#include "fixtures.hpp"
#include "npvsched/instance.hpp"

namespace npvsched {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("npvsched_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_six() const {
    const std::string p = path("six.json");
    write_instance(p, {testing::six(), std::nullopt});
    return p;
  }

  fs::path dir_;
};

TEST_F(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run({"generate", "--design", "4", "--count", "1", "--seed", "1", "--out", path("g")}).code,
            cli::kUsageError);
}

TEST_F(Cli, SolvePrintsResultJson) {
  const std::string in = write_six();
  const Outcome r = run({"solve", "--algo", "hs", "--in", in});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const SolverResult result = result_from_json(json::parse(r.out));
  EXPECT_EQ(result.algorithm, Algorithm::kHs);
  EXPECT_NEAR(result.npv, 3.5662152954135102, 1e-9);

  const Outcome backward = run({"solve", "--algo", "rsfb", "--in", in, "--direction", "backward"});
  ASSERT_EQ(backward.code, cli::kOk);
  EXPECT_EQ(result_from_json(json::parse(backward.out)).direction, Direction::kBackward);

  EXPECT_EQ(run({"solve", "--algo", "simplex", "--in", in}).code, cli::kUsageError);
  EXPECT_EQ(run({"solve", "--algo", "hs", "--in", in, "--direction", "up"}).code, cli::kUsageError);
}

TEST_F(Cli, BadInstanceIsDataError) {
  const std::string p = path("bad.json");
  std::ofstream(p) << "{\"n\": 3}";
  EXPECT_EQ(run({"solve", "--algo", "hs", "--in", p}).code, cli::kDataError);

  const std::string cyclic = path("cyclic.json");
  write_instance(cyclic, {ProjectNetwork({0, 5, 7, 0}, {0, 1, 1, 0},
                                         {{1, 2}, {2, 3}, {3, 2}, {3, 4}}, 10, 24),
                          std::nullopt});
  const Outcome r = run({"oracle-check", "--in", cyclic});
  EXPECT_EQ(r.code, cli::kDataError);
  EXPECT_NE(r.err.find("cycle"), std::string::npos);
}

TEST_F(Cli, OracleCheckPasses) {
  const Outcome r = run({"oracle-check", "--in", write_six()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_NE(r.out.find("SAAFB"), std::string::npos);
  EXPECT_EQ(run({"oracle-check", "--in", write_six(), "--budget", "2"}).code, cli::kDataError);
}

TEST_F(Cli, GenerateIsDeterministic) {
  const std::vector<std::string> args{"generate", "--design", "1", "--count", "3", "--seed", "8"};
  auto with_out = [&](const std::string& d) {
    auto a = args;
    a.push_back("--out");
    a.push_back(path(d));
    return a;
  };
  ASSERT_EQ(run(with_out("a")).code, cli::kOk);
  ASSERT_EQ(run(with_out("b")).code, cli::kOk);
  for (const char* name : {"instance_000000.json", "instance_000002.json"}) {
    std::ifstream a(path("a") + "/" + name);
    std::ifstream b(path("b") + "/" + name);
    std::stringstream sa;
    std::stringstream sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_FALSE(sa.str().empty());
    EXPECT_EQ(sa.str(), sb.str());
  }
}

TEST_F(Cli, BenchThenStats) {
  const std::string csv = path("bench.csv");
  ASSERT_EQ(run({"bench", "--design", "1", "--count", "30", "--seed", "2", "--out", csv,
                 "--parallelism", "1"})
                .code,
            cli::kOk);

  const Outcome summary = run({"stats", "--in", csv, "--report", "summary"});
  ASSERT_EQ(summary.code, cli::kOk) << summary.err;
  EXPECT_EQ(json::parse(summary.out)["restarted"]["HS"]["count"], 30);

  const Outcome ks = run({"stats", "--in", csv, "--report", "ks", "--metric", "restarted"});
  ASSERT_EQ(ks.code, cli::kOk);
  EXPECT_EQ(json::parse(ks.out)["tests"].size(), 3u);

  const Outcome rho = run({"stats", "--in", csv, "--report", "spearman"});
  ASSERT_EQ(rho.code, cli::kOk) << rho.err;
  EXPECT_TRUE(json::parse(rho.out)["RSFB"]["records"].contains("vertices"));

  const Outcome maxcost = run({"stats", "--in", csv, "--report", "maxcost", "--factor", "percNeg",
                           "--perc-neg-cap", "50"});
  ASSERT_EQ(maxcost.code, cli::kOk);
  for (const auto& point : json::parse(maxcost.out)["series"]["SAAFB"]) {
    EXPECT_LE(point[0].get<double>(), 50);
  }

  EXPECT_EQ(run({"stats", "--in", csv, "--report", "maxcost", "--factor", "colour"}).code,
            cli::kUsageError);
}

TEST_F(Cli, BenchToStdout) {
  const Outcome r = run({"bench", "--design", "3", "--count", "2", "--seed", "1", "--algos", "hs",
                     "--out", "-"});
  ASSERT_EQ(r.code, cli::kOk);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 3);
  EXPECT_EQ(run({"bench", "--design", "1", "--count", "1", "--seed", "1", "--algos", "x",
                 "--out", "-"})
                .code,
            cli::kUsageError);
}

}  // namespace
}  // namespace npvsched
