#include "icn/oracle.h"

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "icn/errors.h"
#include "icn/experiments.h"

namespace icn {
namespace {

double GainOf(const std::vector<DeviationReport>& reports,
              const std::string& player) {
  for (const auto& r : reports) {
    if (r.player == player) return r.best_gain;
  }
  ADD_FAILURE() << "no report for " << player;
  return 0.0;
}

SymmetricConfig ReferenceConfig(double gamma, double co, double r = 0.7) {
  return MakeSymmetricConfig(100, gamma, 1.0, r, co, DemandParams{});
}

TEST(BruteForceTest, WorkedInstance) {
  const SymmetricConfig cfg =
      MakeSymmetricConfig(2, 1.0, 1.0, 0.7, 2.0, DemandParams{});
  const BruteForceOutcome b = BruteForceCachingGame(cfg);
  EXPECT_EQ(b.th, 1);
  EXPECT_EQ(b.th_c, 1);
  EXPECT_NEAR(b.p_c, 3.0, 1e-12);
  EXPECT_NEAR(b.p_os, 2.1, 1e-12);
  EXPECT_NEAR(b.f_value, 1.7, 1e-12);
  EXPECT_NEAR(b.g_value, 0.1 / 3.0, 1e-12);
  EXPECT_TRUE(b.transit_stable);
  EXPECT_TRUE(b.provider_stable);
}

TEST(BruteForceTest, RefusesHugeCatalogs) {
  const SymmetricConfig cfg = MakeSymmetricConfig(
      kOracleMaxContents + 1, 0.5, 1.0, 0.7, 60.0, DemandParams{});
  EXPECT_THROW(BruteForceCachingGame(cfg), ResourceLimit);
}

TEST(BruteForceTest, AgreesWithSolverOnRandomConfigs) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const SymmetricConfig cfg = RandomSymmetricConfig(rng);
    const CachingOutcome s = SolveCachingGame(cfg);
    const BruteForceOutcome b = BruteForceCachingGame(cfg);
    SCOPED_TRACE(DescribeConfig(cfg));
    EXPECT_EQ(s.th, b.th);
    EXPECT_EQ(s.th_c, b.th_c);
    EXPECT_NEAR(s.p_c, b.p_c, 1e-12 * std::max(1.0, b.p_c));
    EXPECT_NEAR(s.p_os, b.p_os, 1e-12 * std::max(1.0, b.p_os));
  }
}

TEST(BruteForceTest, DegenerateCatalogs) {
  for (int m : {1, 2, 3}) {
    for (double g : {0.0, 0.5, 1.0}) {
      for (double co : {0.01, 1.0, 1e6}) {
        const SymmetricConfig cfg =
            MakeSymmetricConfig(m, g, 1.0, 1.2, co, DemandParams{});
        const CachingOutcome s = SolveCachingGame(cfg);
        const BruteForceOutcome b = BruteForceCachingGame(cfg);
        EXPECT_EQ(s.th, b.th) << m << ' ' << g << ' ' << co;
        EXPECT_EQ(s.th_c, b.th_c) << m << ' ' << g << ' ' << co;
      }
    }
  }
}

TEST(ConcavityTest, SmallSequences) {
  const std::vector<double> peak{0.0, 1.0, 0.0};
  EXPECT_TRUE(CheckConcavity(peak).empty());
  const std::vector<double> valley{1.0, 0.0, 1.0, 2.0};
  EXPECT_EQ(CheckConcavity(valley), std::vector<int>{1});
  const std::vector<double> line{0.0, 1.0, 2.0};
  EXPECT_TRUE(CheckConcavity(line).empty());
  const std::vector<double> two{0.0, 1.0};
  EXPECT_THROW(CheckConcavity(two), InvalidParameter);
}

TEST(ConcavityTest, TransitObjectiveAtHalfGamma) {
  const SymmetricConfig cfg = ReferenceConfig(0.5, 60.0);
  std::vector<double> f;
  for (int n = 0; n <= 100; ++n) f.push_back(AccessSeq(cfg, n));
  EXPECT_TRUE(CheckConcavity(f).empty());
}

TEST(ConcavityTest, KernelSign) {
  for (int th = 0; th <= 500; th += 7) {
    EXPECT_EQ(ConcavityKernel(th, 0.0), 0.0);
    EXPECT_NEAR(ConcavityKernel(th, 1.0), 0.0, 1e-15);
    for (double g : {0.1, 0.5, 0.9}) {
      EXPECT_LT(ConcavityKernel(th, g), 0.0) << th << ' ' << g;
    }
  }
}

TEST(DeviationTest, NoGainAtEquilibrium) {
  for (double gamma : {0.1, 0.5, 0.9}) {
    for (double co : {40.0, 60.0, 100.0}) {
      const SymmetricConfig cfg = ReferenceConfig(gamma, co);
      const auto reports = DeviationCheckSymmetric(
          cfg, SolveEquilibrium(cfg), DefaultGrid(FromSymmetric(cfg)));
      ASSERT_EQ(reports.size(), 3u);
      for (const auto& r : reports) {
        EXPECT_LE(r.best_gain, 1e-9) << r.player << " via " << r.at_action;
      }
    }
  }
}

TEST(DeviationTest, PerturbedAccessPriceIsDetected) {
  const SymmetricConfig cfg = ReferenceConfig(0.5, 60.0);
  SymmetricEquilibrium eq = SolveEquilibrium(cfg);
  eq.p_a += 1.0;
  const auto reports =
      DeviationCheckSymmetric(cfg, eq, DefaultGrid(FromSymmetric(cfg)));
  EXPECT_GT(GainOf(reports, "access"), 0.0);
}

TEST(DeviationTest, PerturbedTransitThresholdIsDetected) {
  const SymmetricConfig cfg = ReferenceConfig(0.5, 100.0);
  SymmetricEquilibrium eq = SolveEquilibrium(cfg);
  ASSERT_LT(eq.th_c, 100);
  eq.th_c += 1;
  const auto reports =
      DeviationCheckSymmetric(cfg, eq, DefaultGrid(FromSymmetric(cfg)));
  EXPECT_GT(std::max(GainOf(reports, "transit"), GainOf(reports, "provider")),
            0.0);
}

TEST(DeviationTest, PerturbedContentPriceIsDetected) {
  const SymmetricConfig cfg = ReferenceConfig(0.9, 40.0);
  SymmetricEquilibrium eq = SolveEquilibrium(cfg);
  eq.p_oc += 1.0;
  const auto reports =
      DeviationCheckSymmetric(cfg, eq, DefaultGrid(FromSymmetric(cfg)));
  EXPECT_GT(GainOf(reports, "provider"), 0.0);
}

}  // namespace
}  // namespace icn
