#pragma once

#include <variant>

#include "dualpricer/lattice.hpp"
#include "dualpricer/types.hpp"

namespace dualpricer {

/// A contract together with the market it is priced in.
struct Problem {
    OptionSpec spec;
    MarketState market;

    friend bool operator==(const Problem&, const Problem&) = default;
};

/// A problem and its dual-space counterpart. In the dual the strike plays the
/// underlying: spot <-> strike and rate <-> yield are exchanged and the right
/// is flipped, while volatility, maturity and exercise style carry over.
struct DualProblem {
    Problem original;
    Problem dual;
};

DualProblem to_dual(const OptionSpec& spec, const MarketState& market);

/// The dual of a single problem. Applying it twice gives back the input.
Problem dual_of(const Problem& problem);

struct AnalyticEngine {};

struct LatticeEngine {
    LatticeOptions options;
};

using Engine = std::variant<AnalyticEngine, LatticeEngine>;

// Direct pricing under an engine. AnalyticEngine rejects American contracts
// with EngineMismatch.
double direct_price(const OptionSpec& spec, const MarketState& market, const Engine& engine);
double direct_delta(const OptionSpec& spec, const MarketState& market, const Engine& engine);
double direct_gamma(const OptionSpec& spec, const MarketState& market, const Engine& engine);

/// Price of the dual contract: V_put(S, r; K, q) = V_call~(K, q; S, r), and
/// symmetrically for calls.
double price_via_dual(const OptionSpec& spec, const MarketState& market, const Engine& engine);

/// dV/dS = (V~ - K * Delta~) / S, where Delta~ is the dual contract's delta
/// with respect to its own underlying (the original strike K).
double delta_via_dual(const OptionSpec& spec, const MarketState& market, const Engine& engine);

/// d2V/dS2 = K^2 Gamma~ / S^2.
double gamma_via_dual(const OptionSpec& spec, const MarketState& market, const Engine& engine);

enum class Exactness { Exact, Approximation };

struct CurrencyPutQuote {
    double price;
    Exactness exactness;
};

/// Prices an American currency put (market.yield = foreign rate) with the
/// European closed form. With a zero domestic rate the dual call never
/// exercises early, so the result is exact; otherwise it is an approximation
/// that is tight while r < r_f. Throws EngineMismatch unless `spec` is an
/// American put.
CurrencyPutQuote price_currency_put_approx(const OptionSpec& spec, const MarketState& market);

}  // namespace dualpricer
