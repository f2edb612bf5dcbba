#pragma once

#include "dualpricer/types.hpp"

namespace dualpricer {

/// Standard normal cumulative distribution, 0.5 * erfc(-x / sqrt(2)).
double norm_cdf(double x) noexcept;
/// Standard normal density.
double norm_pdf(double x) noexcept;

struct D1D2 {
    double d1;
    double d2;
};

/// d1 = [ln(S/K) + (r - q + sigma^2/2) T] / (sigma sqrt T), d2 = d1 - sigma sqrt T.
/// Throws DomainError for non-positive strike, maturity or volatility.
D1D2 d1_d2(const MarketState& market, double strike, double maturity);

// Closed-form European prices and Greeks (Black-Scholes-Merton with a
// continuous yield; Garman-Kohlhagen when the yield is a foreign rate).
// All three reject American contracts with EngineMismatch.

double bsm_price(const OptionSpec& spec, const MarketState& market);

/// Spot delta: e^{-qT} N(d1) for calls, -e^{-qT} N(-d1) for puts.
double bsm_delta(const OptionSpec& spec, const MarketState& market);

/// e^{-qT} n(d1) / (S sigma sqrt T); identical for calls and puts.
double bsm_gamma(const OptionSpec& spec, const MarketState& market);

/// Convenience for the hedge accounting, which only ever prices calls.
double bsm_call(double spot, double strike, double rate, double yield, double vol, double maturity);

}  // namespace dualpricer
