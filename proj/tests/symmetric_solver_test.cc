#include "icn/symmetric_solver.h"

#include <random>

#include <gtest/gtest.h>

#include "icn/errors.h"
#include "icn/experiments.h"

namespace icn {
namespace {

// M=2, gamma=1: q = (2/3, 1/3), c_A = (1.5, 3), c_C = (1.05, 2.1).
SymmetricConfig Micro(double c_o = 2.0, int k = 2) {
  DemandParams d;
  d.num_access = k;
  return MakeSymmetricConfig(2, 1.0, 1.0, 0.7, c_o, d);
}

TEST(InducedPriceTest, Transit) {
  const SymmetricConfig cfg = Micro();
  EXPECT_NEAR(InducedTransitPrice(cfg, 0), 1.5, 1e-14);
  EXPECT_NEAR(InducedTransitPrice(cfg, 1), 3.0, 1e-14);
  EXPECT_NEAR(InducedTransitPrice(cfg, 2), 3.0, 1e-14);
  EXPECT_THROW(InducedTransitPrice(cfg, 3), IndexOutOfRange);
}

TEST(InducedPriceTest, Storage) {
  const SymmetricConfig cfg = Micro();
  EXPECT_NEAR(InducedStoragePrice(cfg, 0), 1.05, 1e-14);
  EXPECT_NEAR(InducedStoragePrice(cfg, 1), 2.1, 1e-14);
  EXPECT_NEAR(InducedStoragePrice(cfg, 2), 2.1, 1e-14);
}

TEST(InducedPriceTest, ReportedOffset) {
  const SymmetricConfig cfg = Micro();
  EXPECT_EQ(ReportedTransitPrice(cfg, 0), InducedTransitPrice(cfg, 0) - 1e-9);
  EXPECT_EQ(ReportedTransitPrice(cfg, 2), InducedTransitPrice(cfg, 2) + 1e-9);
  EXPECT_EQ(ReportedStoragePrice(cfg, 1), InducedStoragePrice(cfg, 1) - 1e-9);
}

TEST(SequenceTest, AccessSeq) {
  const SymmetricConfig cfg = Micro();
  EXPECT_NEAR(AccessSeq(cfg, 0), 1.5, 1e-14);
  EXPECT_NEAR(AccessSeq(cfg, 1), 1.7, 1e-14);
  EXPECT_NEAR(AccessSeq(cfg, 2), 1.4, 1e-14);
}

TEST(SequenceTest, ProviderSeq) {
  const SymmetricConfig cfg = Micro();
  EXPECT_NEAR(ProviderSeq(cfg, 0), -0.95, 1e-14);
  EXPECT_NEAR(ProviderSeq(cfg, 1), 0.1 / 3.0, 1e-14);
  EXPECT_EQ(ProviderSeq(cfg, 2), 0.0);
}

TEST(FollowerTest, AccessBestThreshold) {
  const SymmetricConfig cfg = Micro();
  EXPECT_EQ(AccessBestThreshold(cfg, 2.0), 1);
  EXPECT_EQ(AccessBestThreshold(cfg, 0.0), 0);
  EXPECT_EQ(AccessBestThreshold(cfg, 3.0), 2);
  EXPECT_EQ(AccessBestThreshold(cfg, 1e6), 2);
}

TEST(FollowerTest, TransitBestThreshold) {
  const SymmetricConfig cfg = Micro();
  EXPECT_EQ(TransitBestThreshold(cfg, 2.0, 1), 1);
  EXPECT_EQ(TransitBestThreshold(cfg, 0.0, 1), 1);
  EXPECT_EQ(TransitBestThreshold(cfg, 2.1, 0), 2);
  EXPECT_EQ(TransitBestThreshold(cfg, 1.5, 0), 1);
}

TEST(CachingGameTest, WorkedInstance) {
  const CachingOutcome c = SolveCachingGame(Micro());
  EXPECT_EQ(c.th, 1);
  EXPECT_EQ(c.th_c, 1);
  EXPECT_NEAR(c.p_c, 3.0, 1e-12);
  EXPECT_NEAR(c.p_os, 2.1, 1e-12);
}

TEST(CachingGameTest, ExpensiveTransitAndProvider) {
  const SymmetricConfig cfg =
      MakeSymmetricConfig(3, 0.5, 1.0, 1.2, 1e6, DemandParams{});
  const CachingOutcome c = SolveCachingGame(cfg);
  EXPECT_EQ(c.th_c, c.th);
}

TEST(CachingGameTest, SingleContent) {
  for (double g : {0.0, 0.5, 1.0}) {
    for (double co : {0.1, 1.0, 100.0}) {
      const SymmetricConfig cfg =
          MakeSymmetricConfig(1, g, 1.0, 0.7, co, DemandParams{});
      const CachingOutcome c = SolveCachingGame(cfg);
      EXPECT_GE(c.th, 0);
      EXPECT_LE(c.th, 1);
      EXPECT_GE(c.th_c, c.th);
      EXPECT_LE(c.th_c, 1);
    }
  }
}

TEST(CachingGameTest, UniformCheapTransitCachesNothingAtAccess) {
  // gamma = 0, R < 1: f has slope c_C0 - c_0 < 0.
  const SymmetricConfig cfg =
      MakeSymmetricConfig(20, 0.0, 1.0, 0.5, 5.0, DemandParams{});
  EXPECT_EQ(SolveCachingGame(cfg).th, 0);
}

TEST(PricingTest, WorkedInstance) {
  const SymmetricConfig cfg = Micro();
  const PricingOutcome p = SolvePricing(cfg, SolveCachingGame(cfg));
  // pOc = (1 - 0.1 * 0.1 * (1/3)) / 0.2, pA = (0.1 * 2 + 1 - 0.1 pOc) / 0.1.
  const double p_oc = (1.0 - 0.01 / 3.0) / 0.2;
  EXPECT_NEAR(p.p_oc, p_oc, 1e-12);
  EXPECT_NEAR(p.p_a, (0.2 + 1.0 - 0.1 * p_oc) / 0.1, 1e-12);
}

TEST(PricingTest, EmptyTailGivesMonopolyContentPrice) {
  const SymmetricConfig cfg = Micro();
  const PricingOutcome p = SolvePricing(cfg, {1, 2, 3.0, 2.1});
  EXPECT_NEAR(p.p_oc, 1.0 / (2.0 * 0.1), 1e-12);
}

TEST(PricingTest, ContentPriceClampsAtZero) {
  const SymmetricConfig cfg = Micro(0.0);
  // Storage margin 2.1 * (1/3) with rho0 = 1 makes the bracket negative.
  SymmetricConfig big = cfg;
  big.demand.rho0 = 1.5;
  const PricingOutcome p = SolvePricing(big, {1, 1, 3.0, 2.1});
  EXPECT_EQ(p.p_oc, 0.0);
}

TEST(PricingTest, RejectsZeroSensitivity) {
  SymmetricConfig cfg = Micro();
  cfg.demand.rho = 0.0;
  EXPECT_THROW(SolvePricing(cfg, {1, 1, 3.0, 2.1}), InvalidParameter);
  cfg = Micro();
  cfg.demand.rho0 = 0.0;
  EXPECT_THROW(SolvePricing(cfg, {1, 1, 3.0, 2.1}), InvalidParameter);
}

TEST(EquilibriumTest, WorkedInstance) {
  const SymmetricEquilibrium eq = SolveEquilibrium(Micro());
  EXPECT_EQ(eq.th, 1);
  EXPECT_EQ(eq.th_c, 1);
  EXPECT_NEAR(eq.p_c, 3.0, 1e-9);
  EXPECT_NEAR(eq.p_os, 2.1, 1e-9);
  EXPECT_NEAR(eq.p_oc, 4.983333333333333, 1e-9);
  EXPECT_NEAR(eq.p_a, 7.016666666666667, 1e-9);
  // sigma = 1 - 0.1 pOc; uA = sigma (pA - 2); uC = 2 sigma (1 - 0 - 0.7);
  // uO = 2 sigma (pOc + 0.1/3).
  const double sigma = 1.0 - 0.1 * eq.p_oc;
  EXPECT_NEAR(eq.sigma, sigma, 1e-12);
  EXPECT_NEAR(eq.u_a, 2.51669, 1e-5);
  EXPECT_NEAR(eq.u_a, sigma * (eq.p_a - 2.0), 1e-12);
  EXPECT_NEAR(eq.u_c, 0.30100, 1e-5);
  EXPECT_NEAR(eq.u_c, 2.0 * sigma * 0.3, 1e-12);
  // 2 * 0.50166... * 5.01666... = 5.0333889; the 5-digit figure 5.03340 is
  // off by one in the last place.
  EXPECT_NEAR(eq.u_o, 5.03340, 2e-5);
  EXPECT_NEAR(eq.u_o, 2.0 * sigma * (eq.p_oc + 0.1 / 3.0), 1e-12);
}

TEST(EquilibriumTest, KOnlyScalesLeaderUtilities) {
  const SymmetricEquilibrium one = SolveEquilibrium(Micro(2.0, 1));
  const SymmetricEquilibrium ten = SolveEquilibrium(Micro(2.0, 10));
  EXPECT_EQ(one.th, ten.th);
  EXPECT_EQ(one.th_c, ten.th_c);
  EXPECT_EQ(one.p_c, ten.p_c);
  EXPECT_EQ(one.p_os, ten.p_os);
  EXPECT_EQ(one.p_a, ten.p_a);
  EXPECT_EQ(one.p_oc, ten.p_oc);
  EXPECT_NEAR(ten.u_c, 10.0 * one.u_c, 1e-12 * ten.u_c);
  EXPECT_NEAR(ten.u_o, 10.0 * one.u_o, 1e-12 * ten.u_o);
}

TEST(EquilibriumTest, EpsilonMustStayInsideCostGap) {
  SymmetricConfig cfg = Micro();
  cfg.epsilon_report = 2.0;  // gap c_A(2) - c_A(1) = 1.5
  EXPECT_THROW(SolveEquilibrium(cfg), InvalidParameter);
  cfg.epsilon_report = -1.0;
  EXPECT_THROW(SolveEquilibrium(cfg), InvalidParameter);
}

TEST(EquilibriumTest, UniformPopularityIsAccepted) {
  const SymmetricConfig cfg =
      MakeSymmetricConfig(50, 0.0, 1.0, 0.7, 60.0, DemandParams{});
  EXPECT_NO_THROW(SolveEquilibrium(cfg));
}

class RandomConfigTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomConfigTest, StructuralInvariants) {
  std::mt19937_64 rng(GetParam());
  RandomConfigRanges ranges;
  ranges.m_max = 120;
  ranges.gamma_min = 0.01;
  for (int t = 0; t < 50; ++t) {
    const SymmetricConfig cfg = RandomSymmetricConfig(rng, ranges);
    const int m = cfg.pm.num_contents();
    const SymmetricEquilibrium eq = SolveEquilibrium(cfg);
    SCOPED_TRACE(DescribeConfig(cfg));

    ASSERT_GE(eq.th, 0);
    ASSERT_LE(eq.th, eq.th_c);
    ASSERT_LE(eq.th_c, m);
    EXPECT_GE(eq.p_os, cfg.costs.provider_unit_cost);
    EXPECT_GE(eq.p_oc, 0.0);

    // The posted prices induce the announced thresholds.
    EXPECT_EQ(AccessBestThreshold(cfg, eq.reported_p_c), eq.th);
    EXPECT_EQ(TransitBestThreshold(cfg, eq.reported_p_os, eq.th), eq.th_c);

    // Per-rank sign pattern: access caches exactly the ranks with
    // P_C > c_A(i); the transit caches th < i <= thC.
    for (int i = 1; i <= m; ++i) {
      const double c_a = CachingCost(cfg.costs.access_base, cfg.pm, i);
      EXPECT_EQ(eq.reported_p_c > c_a, i <= eq.th) << "rank " << i;
      if (i > eq.th) {
        const double c_c = CachingCost(cfg.costs.transit_base, cfg.pm, i);
        EXPECT_EQ(eq.reported_p_os >= c_c, i <= eq.th_c) << "rank " << i;
      }
    }

    // f and g maxima sit at the chosen thresholds.
    for (int n = 0; n <= m; ++n) {
      EXPECT_LE(AccessSeq(cfg, n), AccessSeq(cfg, eq.th) + 1e-12);
    }
    EXPECT_LE(eq.p_oc, 1.0 / (2.0 * cfg.demand.rho0) + 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomConfigTest,
                         ::testing::Values(1u, 2u, 3u, 4u));

}  // namespace
}  // namespace icn
