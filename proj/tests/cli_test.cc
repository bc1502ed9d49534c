// Runs the icn_game executable end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("icn_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  Result Run(const std::string& args) const {
    const std::string capture = Path("captured.txt");
    const std::string cmd = std::string(ICN_GAME_BIN) + " " + args + " > " +
                            capture + " 2>&1";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, Slurp(capture)};
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
  }

  fs::path dir_;
};

int CountLines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

TEST_F(CliTest, SolveWorkedInstance) {
  const Result r = Run("solve --m 2 --gamma 1 --r 0.7 --co 2 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["Th"], 1);
  EXPECT_EQ(j["ThC"], 1);
  EXPECT_NEAR(j["P_A"].get<double>(), 7.016666666666667, 1e-9);
  EXPECT_NEAR(j["P_O_c"].get<double>(), 4.983333333333333, 1e-9);

  const Result text = Run("solve --m 2 --gamma 1 --r 0.7 --co 2");
  ASSERT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("Th     = 1"), std::string::npos);
}

TEST_F(CliTest, SolveWritesJsonFile) {
  const Result r =
      Run("solve --m 2 --gamma 1 --r 0.7 --co 2 --out " + Path("eq.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(Slurp(Path("eq.json")));
  EXPECT_NEAR(j["U_C"].get<double>(), 0.301, 1e-9);
}

TEST_F(CliTest, SolveUsageErrors) {
  EXPECT_EQ(Run("solve --m 2 --r 0.7 --co 2").code, 1);
  const Result bad_gamma = Run("solve --m 2 --gamma 1.5 --r 0.7 --co 2");
  EXPECT_EQ(bad_gamma.code, 1);
  EXPECT_NE(bad_gamma.out.find("gamma out of [0,1]"), std::string::npos);
  const Result bad_number = Run("solve --m 2 --gamma 1 --r abc --co 2");
  EXPECT_EQ(bad_number.code, 1);
  EXPECT_NE(bad_number.out.find("r"), std::string::npos);
  EXPECT_EQ(Run("solve --m 2 --gamma 1 --r 0.7 --co 2 --bogus 1").code, 1);
  EXPECT_EQ(Run("").code, 1);
  EXPECT_EQ(Run("frobnicate").code, 1);
}

TEST_F(CliTest, ConfigFileWithFlagOverride) {
  Write("micro.cfg",
        "# worked instance\n"
        "m = 2\n"
        "gamma = 1   # steep\n"
        "r = 0.7\n"
        "co = 5\n");
  const Result from_file =
      Run("solve --config " + Path("micro.cfg") + " --co 2 --json");
  ASSERT_EQ(from_file.code, 0) << from_file.out;
  EXPECT_NEAR(nlohmann::json::parse(from_file.out)["P_O_s"].get<double>(), 2.1,
              1e-9);

  Write("bad.cfg", "m = 2\nwidth = 3\n");
  const Result bad = Run("solve --config " + Path("bad.cfg"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("width"), std::string::npos);
  EXPECT_EQ(Run("solve --config " + Path("missing.cfg")).code, 1);
}

TEST_F(CliTest, SweepDefaultGridIsDeterministic) {
  const std::string a = Path("a.csv"), b = Path("b.csv");
  ASSERT_EQ(Run("sweep --out " + a).code, 0);
  ASSERT_EQ(Run("sweep --threads 3 --out " + b).code, 0);
  const std::string csv = Slurp(a);
  EXPECT_EQ(CountLines(csv), 301);
  EXPECT_EQ(csv, Slurp(b));
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(csv.rfind("gamma,M,K,R,c0,cO,rho,rho0,beta,Th,ThC,", 0), 0u);
}

TEST_F(CliTest, SweepSinglePointMatchesSolve) {
  ASSERT_EQ(Run("sweep --gamma-from 0.5 --gamma-to 0.5 --co 60 --out " +
                Path("one.csv"))
                .code,
            0);
  const std::string csv = Slurp(Path("one.csv"));
  ASSERT_EQ(CountLines(csv), 2);
  const Result solve = Run("solve --m 100 --gamma 0.5 --r 0.7 --co 60 --json");
  const auto j = nlohmann::json::parse(solve.out);
  const std::string row = csv.substr(csv.find('\n') + 1);
  EXPECT_NE(row.find("," + std::to_string(j["Th"].get<int>()) + ","),
            std::string::npos);
  std::ostringstream pa;
  pa.precision(17);
  pa << j["P_A"].get<double>();
  EXPECT_NE(row.find(pa.str()), std::string::npos) << row;
}

TEST_F(CliTest, SweepErrors) {
  EXPECT_EQ(Run("sweep --out /nonexistent/dir/x.csv").code, 1);
  EXPECT_EQ(Run("sweep --gamma-step 1e-8 --out " + Path("x.csv")).code, 1);
  EXPECT_EQ(Run("sweep --gamma-step 0 --out " + Path("x.csv")).code, 1);
  EXPECT_EQ(Run("sweep --co 40,,60 --out " + Path("x.csv")).code, 1);
}

TEST_F(CliTest, CostsUniform) {
  ASSERT_EQ(Run("costs --gamma 0 --m 100 --c0 1 --out " + Path("c.csv")).code,
            0);
  std::istringstream in(Slurp(Path("c.csv")));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "gamma,i,cost");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_NEAR(std::stod(line.substr(line.rfind(',') + 1)), 100.0, 1e-9);
  }
  EXPECT_EQ(rows, 100);
}

TEST_F(CliTest, VerifyExitCodes) {
  const Result ok = Run("verify oracle --seed 0 --trials 200");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(ok.out.rfind("PASS oracle", 0), 0u);
  EXPECT_EQ(Run("verify concavity").code, 0);
  EXPECT_EQ(Run("verify foo").code, 1);
  EXPECT_EQ(Run("verify").code, 1);
}

TEST_F(CliTest, AsymFromSymmetricEquilibrium) {
  const Result r = Run("asym --gamma 0.5 --init ne --out " + Path("t.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out, "status=FixedPoint sweeps=1\n");
  EXPECT_EQ(CountLines(Slurp(Path("t.csv"))), 1 + 1 + 4);
}

TEST_F(CliTest, AsymAsymmetricCosts) {
  Write("asym.cfg", "gamma = 0.5\nc0-a = 0.5\nc0-b = 2\n");
  const Result r = Run("asym --config " + Path("asym.cfg") + " --out " +
                       Path("t.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("status=", 0), 0u);
  EXPECT_GT(CountLines(Slurp(Path("t.csv"))), 2);
}

TEST_F(CliTest, AsymUsageErrors) {
  EXPECT_EQ(Run("asym --gamma 0.5 --max-iter 0").code, 1);
  EXPECT_EQ(Run("asym --gamma 0.5 --grid-step 0").code, 1);
  EXPECT_EQ(Run("asym --gamma 0.5 --init warm").code, 1);
  EXPECT_EQ(Run("asym --m 10").code, 1);
}

}  // namespace
