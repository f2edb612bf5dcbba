#pragma once

#include "dualpricer/types.hpp"

namespace dualpricer {

/// Recombining binomial parameterizations. Both keep u * d = 1.
///
///  - Trigeorgis: equal jumps in log price, dx = sqrt(sigma^2 dt + nu^2 dt^2)
///    with nu = r - q - sigma^2 / 2, and up-probability 1/2 + nu dt / (2 dx).
///    This is the default; with daily steps it reproduces the reference
///    American put / dual call tables to the printed digits.
///  - Crr: u = exp(sigma sqrt dt), Q = (exp((r - q) dt) - d) / (u - d).
enum class TreeKind { Trigeorgis, Crr };

/// Where tree Greeks are read.
///
///  - ExtendedTree: the tree is started two steps before t = 0 so the spot sits
///    on the middle node of level 2. Gamma uses the three level-2 nodes (all at
///    t = 0); delta uses the two level-1 nodes S u and S d.
///  - StepNodes: Hull's scheme on the ordinary tree. Delta from the two
///    step-1 nodes, gamma from the three step-2 nodes.
enum class GreekScheme { ExtendedTree, StepNodes };

struct LatticeParams {
    int steps = 0;
    double up = 0.0;
    double down = 0.0;
    double prob_up = 0.0;
    double dt = 0.0;
};

/// dt = T / steps; u, d and Q per `kind`. Throws DomainError for steps < 1 and
/// ArbitrageError unless d < exp((r - q) dt) < u and 0 < Q < 1.
LatticeParams build_lattice(const MarketState& market, double maturity, int steps,
                            TreeKind kind = TreeKind::Trigeorgis);

struct LatticeOptions {
    int steps = 365;
    TreeKind tree = TreeKind::Trigeorgis;
    GreekScheme greeks = GreekScheme::ExtendedTree;

    friend bool operator==(const LatticeOptions&, const LatticeOptions&) = default;
};

struct LatticeResult {
    double price;
    double delta;
    double gamma;
};

/// Backward induction with discount exp(-r dt). American contracts take
/// max(hold, intrinsic) at every node; a tie keeps the hold value.
double lattice_price(const OptionSpec& spec, const MarketState& market, int steps,
                     TreeKind kind = TreeKind::Trigeorgis);

/// Price, delta and gamma from a single backward pass. Requires steps >= 2.
LatticeResult lattice_evaluate(const OptionSpec& spec, const MarketState& market,
                               const LatticeOptions& options = {});

double lattice_delta(const OptionSpec& spec, const MarketState& market,
                     const LatticeOptions& options = {});
double lattice_gamma(const OptionSpec& spec, const MarketState& market,
                     const LatticeOptions& options = {});

enum class ExerciseHint { HoldLikely, ExerciseLikely };

/// One-step comparison of an American call's hold value against exercise:
/// holding is (approximately) optimal while S q < K r. Ties hold.
ExerciseHint early_exercise_hint(double spot, double strike, double rate, double yield);

}  // namespace dualpricer
