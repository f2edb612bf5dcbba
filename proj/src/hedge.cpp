#include "dualpricer/hedge.hpp"

#include <algorithm>
#include <cmath>

#include "dualpricer/analytic.hpp"
#include "dualpricer/errors.hpp"

namespace dualpricer {

namespace {

using Matrix3 = std::array<std::array<double, 3>, 3>;

double det3(const Matrix3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double require_positive_spot(double spot) {
    if (!(spot > 0.0) || !std::isfinite(spot)) {
        throw DomainError("spot must be positive and finite");
    }
    return spot;
}

double portfolio_value(const HedgeConfig& cfg, const HedgeWeights& w, double spot, double elapsed) {
    auto call = [&](double strike, double maturity) {
        return bsm_call(spot, strike, cfg.rate, cfg.yield, cfg.local_vol, maturity - elapsed);
    };
    return w.down * call(cfg.strike_down, cfg.front_maturity) +
           w.center * call(cfg.strike_center, cfg.center_maturity) +
           w.up * call(cfg.strike_up, cfg.front_maturity);
}

}  // namespace

std::string_view to_string(HedgeScheme scheme) noexcept {
    return scheme == HedgeScheme::BsmDual ? "bsm-dual" : "wu-zhu";
}

void validate(const HedgeConfig& cfg, HedgeScheme scheme) {
    const double values[] = {cfg.strike,          cfg.maturity,        cfg.strike_down,
                             cfg.strike_center,   cfg.strike_up,       cfg.front_maturity,
                             cfg.center_maturity, cfg.horizon,         cfg.local_vol,
                             cfg.rate,            cfg.yield};
    if (!std::all_of(std::begin(values), std::end(values), [](double v) { return std::isfinite(v); })) {
        throw HedgeConstraintError("all inputs finite");
    }
    if (!(cfg.local_vol > 0.0)) throw HedgeConstraintError("sigma(K,T_h) > 0");
    if (!(cfg.strike_down > 0.0)) throw HedgeConstraintError("K_d > 0");
    if (!(cfg.horizon > 0.0)) throw HedgeConstraintError("T_h > 0");
    if (!(cfg.strike_down < cfg.strike)) throw HedgeConstraintError("K_d < K");
    if (!(cfg.strike < cfg.strike_up)) throw HedgeConstraintError("K < K_u");
    if (!(cfg.strike_down <= cfg.strike_center)) throw HedgeConstraintError("K_d <= K_c");
    if (!(cfg.strike_center <= cfg.strike_up)) throw HedgeConstraintError("K_c <= K_u");

    const double first_expiry = std::min(cfg.front_maturity, cfg.center_maturity);
    if (scheme == HedgeScheme::WuZhu) {
        if (!(cfg.horizon <= first_expiry)) throw HedgeConstraintError("T_h <= min(T_o, T_c)");
    } else if (!(cfg.horizon < first_expiry)) {
        throw HedgeConstraintError("T_h < min(T_o, T_c)");
    }
    if (!(std::max(cfg.front_maturity, cfg.center_maturity) < cfg.maturity)) {
        throw HedgeConstraintError("max(T_o, T_c) < T");
    }
}

DualCoefficients dual_coefficients(const HedgeConfig& cfg) {
    const double remaining = cfg.maturity - cfg.horizon;
    if (!(remaining > 0.0)) throw HedgeConstraintError("T_h < T");
    if (!(cfg.local_vol > 0.0)) throw HedgeConstraintError("sigma(K,T_h) > 0");

    const double root = std::sqrt(remaining);
    const double scale = cfg.local_vol * cfg.strike * root;
    return DualCoefficients{
        .h_down = (cfg.strike_down - cfg.strike) / scale,
        .h_center = (cfg.strike_center - cfg.strike) / scale,
        .h_up = (cfg.strike_up - cfg.strike) / scale,
        .alpha_front = (cfg.horizon - cfg.front_maturity) / remaining,
        .alpha_center = (cfg.horizon - cfg.center_maturity) / remaining,
        .beta = (cfg.rate - cfg.yield) * root / cfg.local_vol,
        .gamma = cfg.yield * remaining,
    };
}

HedgeConfig scheme_config(const HedgeConfig& cfg, HedgeScheme scheme) {
    if (scheme == HedgeScheme::BsmDual) {
        return cfg;
    }
    HedgeConfig wz = cfg;
    wz.rate = 0.0;
    wz.yield = 0.0;
    wz.horizon = cfg.front_maturity;
    return wz;
}

WeightSystem weight_system(const DualCoefficients& c) {
    const std::array<double, 3> h{c.h_down, c.h_center, c.h_up};
    const std::array<double, 3> alpha{c.alpha_front, c.alpha_center, c.alpha_front};
    WeightSystem s{};
    for (int k = 0; k < 3; ++k) {
        s.matrix[0][k] = 1.0 + c.gamma * h[k] * h[k];
        s.matrix[1][k] = (1.0 + c.beta * h[k]) * h[k];
        s.matrix[2][k] = h[k] * h[k] - alpha[k];
    }
    s.rhs = {1.0, 0.0, 1.0};
    return s;
}

HedgeWeights solve_weight_system(const DualCoefficients& c, HedgeScheme scheme) {
    const WeightSystem s = weight_system(c);
    const double det = det3(s.matrix);
    if (!(std::abs(det) >= kSingularDeterminant)) {
        throw SingularHedgeSystem(det);
    }

    auto cramer = [&](const std::array<double, 3>& rhs) {
        std::array<double, 3> x{};
        for (int col = 0; col < 3; ++col) {
            Matrix3 m = s.matrix;
            for (int row = 0; row < 3; ++row) {
                m[row][col] = rhs[row];
            }
            x[col] = det3(m) / det;
        }
        return x;
    };

    std::array<double, 3> w = cramer(s.rhs);
    // One refinement step; large |h| makes the entries big enough that the
    // plain solve leaves residuals of a few 1e-12.
    std::array<double, 3> residual{};
    for (int row = 0; row < 3; ++row) {
        residual[row] = s.rhs[row] - (s.matrix[row][0] * w[0] + s.matrix[row][1] * w[1] + s.matrix[row][2] * w[2]);
    }
    const std::array<double, 3> correction = cramer(residual);
    for (int k = 0; k < 3; ++k) {
        w[k] += correction[k];
    }
    return {w[0], w[1], w[2], scheme, det};
}

HedgeWeights solve_weights(const HedgeConfig& cfg, HedgeScheme scheme) {
    validate(cfg, scheme);
    return solve_weight_system(dual_coefficients(scheme_config(cfg, scheme)), scheme);
}

double hedged_call_at_horizon(const HedgeConfig& cfg, double spot) {
    return bsm_call(require_positive_spot(spot), cfg.strike, cfg.rate, cfg.yield, cfg.local_vol,
                    cfg.maturity - cfg.horizon);
}

double hedged_call_at_setup(const HedgeConfig& cfg, double spot) {
    return bsm_call(require_positive_spot(spot), cfg.strike, cfg.rate, cfg.yield, cfg.local_vol,
                    cfg.maturity);
}

HedgeAmount gross_error(const HedgeConfig& cfg, const HedgeWeights& w, double spot_at_horizon) {
    const double target = hedged_call_at_horizon(cfg, spot_at_horizon);
    const double eps = portfolio_value(cfg, w, spot_at_horizon, cfg.horizon) - target;
    return {eps, 100.0 * eps / target};
}

HedgeAmount net_cost(const HedgeConfig& cfg, const HedgeWeights& w, double spot_at_setup) {
    const double target = hedged_call_at_setup(cfg, spot_at_setup);
    const double x = portfolio_value(cfg, w, spot_at_setup, 0.0) - target;
    return {x, 100.0 * x / target};
}

HedgeReport true_error(const HedgeConfig& cfg, const HedgeWeights& w, double spot_at_setup,
                       double spot_at_horizon) {
    const HedgeAmount gross = gross_error(cfg, w, spot_at_horizon);
    const HedgeAmount cost = net_cost(cfg, w, spot_at_setup);
    const double e = gross.value - cost.value * std::exp(cfg.rate * cfg.horizon);
    return HedgeReport{
        .gross_error = gross.value,
        .gross_error_pct = gross.pct,
        .net_cost = cost.value,
        .net_cost_pct = cost.pct,
        .true_error = e,
        .true_error_pct = 100.0 * e / hedged_call_at_horizon(cfg, spot_at_horizon),
    };
}

}  // namespace dualpricer
