#include "dualpricer/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "dualpricer/errors.hpp"

namespace dualpricer {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform in (0, 1]; never zero so the log in Box-Muller is finite.
double to_unit(std::uint64_t bits) {
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

struct PathError {
    double ratio;
    double squared;
};

PathError path_error(const SimConfig& cfg, const HedgeWeights& w, double z) {
    const HedgeConfig& h = cfg.hedge;
    const double terminal = gbm_terminal(cfg.spot0, cfg.drift, h.local_vol, h.horizon, z);
    const HedgeReport r = true_error(h, w, cfg.spot0, terminal);
    return {r.true_error / hedged_call_at_horizon(h, terminal), r.true_error * r.true_error};
}

template <class Draw>
SimSummary simulate(const SimConfig& cfg, std::int64_t n, Draw draw) {
    if (n < 1) {
        throw DomainError("simulation needs at least one path");
    }
    if (!(cfg.spot0 > 0.0) || !std::isfinite(cfg.drift)) {
        throw DomainError("simulation needs a positive spot and a finite drift");
    }
    const HedgeWeights w = solve_weights(cfg.hedge, cfg.scheme);

    std::vector<PathError> results(static_cast<std::size_t>(n));
    unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::int64_t>(workers, n));

    auto work = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            results[static_cast<std::size_t>(i)] = path_error(cfg, w, draw(i));
        }
    };
    if (workers <= 1) {
        work(0, n);
    } else {
        std::vector<std::jthread> pool;
        const std::int64_t chunk = (n + workers - 1) / workers;
        for (std::int64_t begin = 0; begin < n; begin += chunk) {
            pool.emplace_back(work, begin, std::min(n, begin + chunk));
        }
    }

    // Reduce in path order so the sums do not depend on the thread count.
    double sum = 0.0, sum_abs = 0.0, sum_sq = 0.0;
    for (const PathError& p : results) {
        sum += p.ratio;
        sum_abs += std::abs(p.ratio);
        sum_sq += p.squared;
    }
    const double count = static_cast<double>(n);
    return {100.0 * sum / count, 100.0 * sum_abs / count, std::sqrt(sum_sq / count), n};
}

}  // namespace

double gbm_terminal(double spot0, double drift, double vol, double horizon, double z) {
    if (!(spot0 > 0.0) || !(vol > 0.0) || !(horizon > 0.0)) {
        throw DomainError("gbm_terminal needs positive spot, volatility and horizon");
    }
    return spot0 * std::exp((drift - 0.5 * vol * vol) * horizon + vol * std::sqrt(horizon) * z);
}

double standard_normal(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t key = splitmix64(seed);
    const std::uint64_t a = splitmix64(key ^ (2 * index));
    const std::uint64_t b = splitmix64(key ^ (2 * index + 1));
    const double radius = std::sqrt(-2.0 * std::log(to_unit(a)));
    return radius * std::cos(2.0 * std::numbers::pi * to_unit(b));
}

SimSummary run_hedge_sim(const SimConfig& cfg) {
    return simulate(cfg, cfg.paths, [&](std::int64_t i) {
        return standard_normal(cfg.seed, static_cast<std::uint64_t>(i));
    });
}

SimSummary summarize_hedge_paths(const SimConfig& cfg, std::span<const double> draws) {
    return simulate(cfg, static_cast<std::int64_t>(draws.size()),
                    [&](std::int64_t i) { return draws[static_cast<std::size_t>(i)]; });
}

}  // namespace dualpricer
