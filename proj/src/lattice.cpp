#include "dualpricer/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "dualpricer/errors.hpp"

namespace dualpricer {

namespace {

double intrinsic(Right right, double spot, double strike) {
    return right == Right::Call ? std::max(spot - strike, 0.0) : std::max(strike - spot, 0.0);
}

// Option values and spots on the first three levels of a tree.
struct TreeHead {
    std::array<double, 1> v0{};
    std::array<double, 2> v1{};
    std::array<double, 3> v2{};
    std::array<double, 2> s1{};
    std::array<double, 3> s2{};
};

// Rolls back `levels` steps from maturity to a root at `root_spot`. Index j
// counts up-moves, so j = 0 is the lowest node.
TreeHead roll_back(const OptionSpec& spec, const MarketState& market, const LatticeParams& p,
                   int levels, double root_spot) {
    const double log_up = std::log(p.up);
    const double log_down = std::log(p.down);
    const double discount = std::exp(-market.rate * p.dt);
    const double q_up = p.prob_up;
    const bool american = spec.style == Style::American;

    auto node_spot = [&](int level, int j) {
        return root_spot * std::exp(j * log_up + (level - j) * log_down);
    };

    std::vector<double> values(static_cast<std::size_t>(levels) + 1);
    for (int j = 0; j <= levels; ++j) {
        values[j] = intrinsic(spec.right, node_spot(levels, j), spec.strike);
    }

    TreeHead head;
    for (int level = levels - 1; level >= 0; --level) {
        for (int j = 0; j <= level; ++j) {
            double v = discount * (q_up * values[j + 1] + (1.0 - q_up) * values[j]);
            if (american) {
                v = std::max(v, intrinsic(spec.right, node_spot(level, j), spec.strike));
            }
            values[j] = v;
        }
        if (level == 2) {
            for (int j = 0; j < 3; ++j) {
                head.v2[j] = values[j];
                head.s2[j] = node_spot(2, j);
            }
        } else if (level == 1) {
            for (int j = 0; j < 2; ++j) {
                head.v1[j] = values[j];
                head.s1[j] = node_spot(1, j);
            }
        }
    }
    head.v0[0] = values[0];
    return head;
}

double head_delta(const TreeHead& h) {
    return (h.v1[1] - h.v1[0]) / (h.s1[1] - h.s1[0]);
}

double head_gamma(const TreeHead& h) {
    const double upper = (h.v2[2] - h.v2[1]) / (h.s2[2] - h.s2[1]);
    const double lower = (h.v2[1] - h.v2[0]) / (h.s2[1] - h.s2[0]);
    return (upper - lower) / (0.5 * (h.s2[2] - h.s2[0]));
}

}  // namespace

LatticeParams build_lattice(const MarketState& market, double maturity, int steps, TreeKind kind) {
    market.validate();
    if (steps < 1) {
        throw DomainError("lattice needs at least one step");
    }
    if (!(maturity > 0.0)) {
        throw DomainError("maturity must be positive");
    }

    LatticeParams p;
    p.steps = steps;
    p.dt = maturity / steps;
    const double carry = market.rate - market.yield;

    switch (kind) {
        case TreeKind::Crr: {
            p.up = std::exp(market.vol * std::sqrt(p.dt));
            p.down = 1.0 / p.up;
            p.prob_up = (std::exp(carry * p.dt) - p.down) / (p.up - p.down);
            break;
        }
        case TreeKind::Trigeorgis: {
            const double drift = carry - 0.5 * market.vol * market.vol;
            const double dx = std::sqrt(market.vol * market.vol * p.dt + drift * drift * p.dt * p.dt);
            p.up = std::exp(dx);
            p.down = std::exp(-dx);
            p.prob_up = 0.5 + 0.5 * drift * p.dt / dx;
            break;
        }
    }

    const double growth = std::exp(carry * p.dt);
    if (!(p.down < growth && growth < p.up) || !(p.prob_up > 0.0 && p.prob_up < 1.0)) {
        throw ArbitrageError("binomial step violates d < exp((r-q)dt) < u; use more steps or a larger volatility");
    }
    return p;
}

double lattice_price(const OptionSpec& spec, const MarketState& market, int steps, TreeKind kind) {
    spec.validate();
    const LatticeParams p = build_lattice(market, spec.maturity, steps, kind);
    return roll_back(spec, market, p, steps, market.spot).v0[0];
}

LatticeResult lattice_evaluate(const OptionSpec& spec, const MarketState& market,
                               const LatticeOptions& options) {
    spec.validate();
    if (options.steps < 2) {
        throw DomainError("tree Greeks need at least two steps");
    }
    const LatticeParams p = build_lattice(market, spec.maturity, options.steps, options.tree);

    if (options.greeks == GreekScheme::StepNodes) {
        const TreeHead h = roll_back(spec, market, p, options.steps, market.spot);
        return {h.v0[0], head_delta(h), head_gamma(h)};
    }

    // Two extra levels in front; the middle level-2 node is the spot at t = 0.
    const double root = market.spot / (p.up * p.down);
    const TreeHead h = roll_back(spec, market, p, options.steps + 2, root);
    return {h.v2[1], head_delta(h), head_gamma(h)};
}

double lattice_delta(const OptionSpec& spec, const MarketState& market, const LatticeOptions& options) {
    return lattice_evaluate(spec, market, options).delta;
}

double lattice_gamma(const OptionSpec& spec, const MarketState& market, const LatticeOptions& options) {
    return lattice_evaluate(spec, market, options).gamma;
}

ExerciseHint early_exercise_hint(double spot, double strike, double rate, double yield) {
    if (!(spot > 0.0) || !(strike > 0.0)) {
        throw DomainError("spot and strike must be positive");
    }
    return spot * yield > strike * rate ? ExerciseHint::ExerciseLikely : ExerciseHint::HoldLikely;
}

}  // namespace dualpricer
