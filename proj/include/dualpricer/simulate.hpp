#pragma once

#include <cstdint>
#include <span>

#include "dualpricer/hedge.hpp"

namespace dualpricer {

struct SimConfig {
    double spot0 = 50.0;
    double drift = 0.04;  // real-world mu of the GBM
    std::int64_t paths = 10000;
    std::uint64_t seed = 1;
    HedgeConfig hedge{};
    HedgeScheme scheme = HedgeScheme::BsmDual;
    unsigned threads = 0;  // 0 = hardware concurrency; results do not depend on it
};

struct SimSummary {
    double mhe_pct = 0.0;
    double mae_pct = 0.0;
    double rmse = 0.0;
    std::int64_t paths = 0;

    friend bool operator==(const SimSummary&, const SimSummary&) = default;
};

/// S0 exp((mu - sigma^2/2) T_h + sigma sqrt(T_h) z).
double gbm_terminal(double spot0, double drift, double vol, double horizon, double z);

/// Standard normal draw number `index` of stream `seed`. Counter based
/// (SplitMix64 on seed and index, then Box-Muller), so each path's draw is
/// independent of evaluation order.
double standard_normal(std::uint64_t seed, std::uint64_t index);

/// Simulates `paths` terminal prices under GBM with volatility
/// hedge.local_vol over [0, T_h] and averages the true hedge error.
/// MHE = mean(e_h / c) and MAE = mean(|e_h / c|) in percent, where c is the
/// hedged call at T_h on that path; RMSE = sqrt(mean(e_h^2)).
SimSummary run_hedge_sim(const SimConfig& cfg);

/// Same accounting on caller-supplied normal draws (one path per draw).
SimSummary summarize_hedge_paths(const SimConfig& cfg, std::span<const double> draws);

}  // namespace dualpricer
