#include "dualpricer/duality.hpp"

#include "dualpricer/analytic.hpp"
#include "dualpricer/errors.hpp"

namespace dualpricer {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Problem dual_of(const Problem& problem) {
    const auto& [spec, market] = problem;
    return Problem{
        OptionSpec{flip(spec.right), spec.style, market.spot, spec.maturity},
        MarketState{spec.strike, market.yield, market.rate, market.vol},
    };
}

DualProblem to_dual(const OptionSpec& spec, const MarketState& market) {
    spec.validate();
    market.validate();
    const Problem original{spec, market};
    return {original, dual_of(original)};
}

double direct_price(const OptionSpec& spec, const MarketState& market, const Engine& engine) {
    return std::visit(overloaded{
                          [&](const AnalyticEngine&) { return bsm_price(spec, market); },
                          [&](const LatticeEngine& e) {
                              return lattice_price(spec, market, e.options.steps, e.options.tree);
                          },
                      },
                      engine);
}

double direct_delta(const OptionSpec& spec, const MarketState& market, const Engine& engine) {
    return std::visit(overloaded{
                          [&](const AnalyticEngine&) { return bsm_delta(spec, market); },
                          [&](const LatticeEngine& e) { return lattice_delta(spec, market, e.options); },
                      },
                      engine);
}

double direct_gamma(const OptionSpec& spec, const MarketState& market, const Engine& engine) {
    return std::visit(overloaded{
                          [&](const AnalyticEngine&) { return bsm_gamma(spec, market); },
                          [&](const LatticeEngine& e) { return lattice_gamma(spec, market, e.options); },
                      },
                      engine);
}

double price_via_dual(const OptionSpec& spec, const MarketState& market, const Engine& engine) {
    const Problem dual = to_dual(spec, market).dual;
    return direct_price(dual.spec, dual.market, engine);
}

double delta_via_dual(const OptionSpec& spec, const MarketState& market, const Engine& engine) {
    const Problem dual = to_dual(spec, market).dual;

    double dual_value = 0.0;
    double dual_delta = 0.0;
    if (const auto* lattice = std::get_if<LatticeEngine>(&engine)) {
        const LatticeResult r = lattice_evaluate(dual.spec, dual.market, lattice->options);
        dual_value = r.price;
        dual_delta = r.delta;
    } else {
        dual_value = bsm_price(dual.spec, dual.market);
        dual_delta = bsm_delta(dual.spec, dual.market);
    }
    return (dual_value - spec.strike * dual_delta) / market.spot;
}

double gamma_via_dual(const OptionSpec& spec, const MarketState& market, const Engine& engine) {
    const Problem dual = to_dual(spec, market).dual;
    const double moneyness = spec.strike / market.spot;
    return moneyness * moneyness * direct_gamma(dual.spec, dual.market, engine);
}

CurrencyPutQuote price_currency_put_approx(const OptionSpec& spec, const MarketState& market) {
    if (spec.right != Right::Put || spec.style != Style::American) {
        throw EngineMismatch("currency put approximation expects an American put");
    }
    const OptionSpec european{Right::Put, Style::European, spec.strike, spec.maturity};
    const double price = bsm_price(european, market);
    return {price, market.rate == 0.0 ? Exactness::Exact : Exactness::Approximation};
}

}  // namespace dualpricer
