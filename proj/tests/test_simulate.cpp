#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dualpricer/errors.hpp"
#include "dualpricer/simulate.hpp"

using namespace dualpricer;

namespace {

double stdev(const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

TEST(GbmTerminal, MedianPath) {
    EXPECT_NEAR(gbm_terminal(50.0, 0.04, 0.2, 0.0696, 0.0), 50.0 * std::exp((0.04 - 0.02) * 0.0696), 1e-12);
}

TEST(GbmTerminal, SmallVolatilityLimit) {
    EXPECT_NEAR(gbm_terminal(50.0, 0.08, 1e-9, 0.5, 1.3), 50.0 * std::exp(0.04), 1e-7);
}

TEST(GbmTerminal, HandCalculatorOracle) {
    EXPECT_NEAR(gbm_terminal(50.0, 0.04, 0.2, 0.0696, 1.0), 52.78244367482865, 1e-12);
}

TEST(GbmTerminal, RejectsDegenerateInputs) {
    EXPECT_THROW(gbm_terminal(0.0, 0.04, 0.2, 0.1, 0.0), DomainError);
    EXPECT_THROW(gbm_terminal(50.0, 0.04, 0.0, 0.1, 0.0), DomainError);
    EXPECT_THROW(gbm_terminal(50.0, 0.04, 0.2, 0.0, 0.0), DomainError);
}

TEST(StandardNormal, DeterministicAndSeedDependent) {
    EXPECT_EQ(standard_normal(7, 123), standard_normal(7, 123));
    EXPECT_NE(standard_normal(7, 123), standard_normal(8, 123));
    EXPECT_NE(standard_normal(7, 123), standard_normal(7, 124));
}

TEST(StandardNormal, Moments) {
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0, below = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = standard_normal(99, static_cast<std::uint64_t>(i));
        ASSERT_TRUE(std::isfinite(z));
        sum += z;
        sum2 += z * z;
        below += z < -1.0 ? 1.0 : 0.0;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sum2 / n, 1.0, 0.01);
    EXPECT_NEAR(below / n, 0.15865525393145707, 0.003);
}

TEST(RunHedgeSim, DeterministicUnderFixedSeed) {
    SimConfig cfg;
    cfg.paths = 5000;
    cfg.seed = 2024;
    EXPECT_EQ(run_hedge_sim(cfg), run_hedge_sim(cfg));
}

TEST(RunHedgeSim, ThreadCountDoesNotChangeResults) {
    SimConfig cfg;
    cfg.paths = 5001;
    cfg.seed = 5;
    cfg.threads = 1;
    const SimSummary serial = run_hedge_sim(cfg);
    for (unsigned threads : {2u, 3u, 8u}) {
        cfg.threads = threads;
        EXPECT_EQ(run_hedge_sim(cfg), serial);
    }
}

TEST(RunHedgeSim, SinglePathAtTheMedian) {
    SimConfig cfg;
    cfg.spot0 = 48.0;
    const double z = 0.0;
    const SimSummary s = summarize_hedge_paths(cfg, std::span<const double>(&z, 1));
    const double terminal = gbm_terminal(48.0, cfg.drift, cfg.hedge.local_vol, cfg.hedge.horizon, 0.0);
    const HedgeReport r = true_error(cfg.hedge, solve_weights(cfg.hedge, cfg.scheme), 48.0, terminal);
    EXPECT_DOUBLE_EQ(s.mhe_pct, r.true_error_pct);
    EXPECT_DOUBLE_EQ(s.mae_pct, std::abs(r.true_error_pct));
    EXPECT_DOUBLE_EQ(s.rmse, std::abs(r.true_error));
    EXPECT_EQ(s.paths, 1);
}

TEST(RunHedgeSim, SummaryInvariants) {
    for (double spot : {46.0, 50.0, 54.0}) {
        for (HedgeScheme scheme : {HedgeScheme::BsmDual, HedgeScheme::WuZhu}) {
            SimConfig cfg;
            cfg.spot0 = spot;
            cfg.scheme = scheme;
            cfg.paths = 2000;
            const SimSummary s = run_hedge_sim(cfg);
            EXPECT_GE(s.mae_pct, std::abs(s.mhe_pct));
            EXPECT_GE(s.rmse, 0.0);
            EXPECT_EQ(s.paths, 2000);
        }
    }
}

TEST(RunHedgeSim, RejectsBadConfig) {
    SimConfig cfg;
    cfg.paths = 0;
    EXPECT_THROW(run_hedge_sim(cfg), DomainError);
    cfg.paths = 10;
    cfg.spot0 = -1.0;
    EXPECT_THROW(run_hedge_sim(cfg), DomainError);
    cfg.spot0 = 50.0;
    cfg.hedge.strike_up = 45.0;
    EXPECT_THROW(run_hedge_sim(cfg), HedgeConstraintError);
}

TEST(RunHedgeSim, ReferenceRows) {
    SimConfig cfg;
    cfg.spot0 = 50.0;
    cfg.drift = 0.04;
    const SimSummary bsm = run_hedge_sim(cfg);
    EXPECT_NEAR(bsm.mhe_pct, 1.19, 0.5);
    EXPECT_NEAR(bsm.mae_pct, 2.44, 1.0);
    EXPECT_NEAR(bsm.rmse, 0.058, 0.015);

    cfg.spot0 = 46.0;
    cfg.drift = 0.08;
    cfg.scheme = HedgeScheme::WuZhu;
    const SimSummary wz = run_hedge_sim(cfg);
    EXPECT_NEAR(wz.mhe_pct, 6.42, 0.5);
    EXPECT_NEAR(wz.mae_pct, 11.63, 1.0);
    EXPECT_NEAR(wz.rmse, 0.147, 0.015);
}

TEST(RunHedgeSim, BsmDualBeatsWuZhuAcrossSeeds) {
    for (std::uint64_t seed : {3u, 17u, 101u}) {
        for (double spot : {46.0, 50.0, 54.0}) {
            SimConfig cfg;
            cfg.spot0 = spot;
            cfg.seed = seed;
            const double bsm = run_hedge_sim(cfg).rmse;
            cfg.scheme = HedgeScheme::WuZhu;
            EXPECT_LT(bsm, run_hedge_sim(cfg).rmse) << "seed " << seed << " spot " << spot;
        }
    }
}

TEST(RunHedgeSim, DispersionShrinksWithPaths) {
    std::vector<double> small, large;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SimConfig cfg;
        cfg.seed = seed;
        cfg.paths = 1000;
        small.push_back(run_hedge_sim(cfg).mhe_pct);
        cfg.paths = 100000;
        large.push_back(run_hedge_sim(cfg).mhe_pct);
    }
    EXPECT_LT(stdev(large), stdev(small));
}
