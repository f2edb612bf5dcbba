#include "dualpricer/analytic.hpp"

#include <cmath>
#include <numbers>

#include "dualpricer/errors.hpp"

namespace dualpricer {

namespace {

void require_european(const OptionSpec& spec) {
    if (spec.style != Style::European) {
        throw EngineMismatch("closed-form pricing supports European exercise only");
    }
}

}  // namespace

double norm_cdf(double x) noexcept {
    return 0.5 * std::erfc(-x * std::numbers::sqrt2 * 0.5);
}

double norm_pdf(double x) noexcept {
    return std::exp(-0.5 * x * x) * (0.5 * std::numbers::sqrt2 * std::numbers::inv_sqrtpi);
}

D1D2 d1_d2(const MarketState& market, double strike, double maturity) {
    if (!(strike > 0.0)) {
        throw DomainError("strike must be positive");
    }
    if (!(maturity > 0.0)) {
        throw DomainError("maturity must be positive");
    }
    if (!(market.vol > 0.0)) {
        throw DomainError("volatility must be positive");
    }
    const double vol_sqrt_t = market.vol * std::sqrt(maturity);
    const double d1 = (std::log(market.spot / strike) +
                       (market.rate - market.yield + 0.5 * market.vol * market.vol) * maturity) /
                      vol_sqrt_t;
    return {d1, d1 - vol_sqrt_t};
}

double bsm_price(const OptionSpec& spec, const MarketState& market) {
    require_european(spec);
    spec.validate();
    market.validate();

    const auto [d1, d2] = d1_d2(market, spec.strike, spec.maturity);
    const double fwd_spot = market.spot * std::exp(-market.yield * spec.maturity);
    const double pv_strike = spec.strike * std::exp(-market.rate * spec.maturity);

    if (spec.right == Right::Call) {
        return fwd_spot * norm_cdf(d1) - pv_strike * norm_cdf(d2);
    }
    return pv_strike * norm_cdf(-d2) - fwd_spot * norm_cdf(-d1);
}

double bsm_delta(const OptionSpec& spec, const MarketState& market) {
    require_european(spec);
    spec.validate();
    market.validate();

    const double d1 = d1_d2(market, spec.strike, spec.maturity).d1;
    const double carry = std::exp(-market.yield * spec.maturity);
    return spec.right == Right::Call ? carry * norm_cdf(d1) : -carry * norm_cdf(-d1);
}

double bsm_gamma(const OptionSpec& spec, const MarketState& market) {
    require_european(spec);
    spec.validate();
    market.validate();

    const double d1 = d1_d2(market, spec.strike, spec.maturity).d1;
    return std::exp(-market.yield * spec.maturity) * norm_pdf(d1) /
           (market.spot * market.vol * std::sqrt(spec.maturity));
}

double bsm_call(double spot, double strike, double rate, double yield, double vol, double maturity) {
    return bsm_price({Right::Call, Style::European, strike, maturity}, {spot, rate, yield, vol});
}

}  // namespace dualpricer
