#pragma once

#include <array>
#include <string_view>

namespace dualpricer {

/// Static hedge of a call (K, T) with three shorter-dated calls, held over
/// [0, T_h]. Defaults are the reference setup: a 6-month call struck at 50
/// hedged with (40, 1m), (50, 2m), (60, 1m), horizon ending five days before
/// the front contract expires, r = 5%, q = 1%, sigma = 20%.
struct HedgeConfig {
    double strike = 50.0;
    double maturity = 0.5;
    double strike_down = 40.0;
    double strike_center = 50.0;
    double strike_up = 60.0;
    double front_maturity = 1.0 / 12.0;   // T_o, shared by the down and up legs
    double center_maturity = 2.0 / 12.0;  // T_c
    double horizon = 1.0 / 12.0 - 5.0 / 365.0;
    double local_vol = 0.2;  // sigma(K, T_h); the model volatility under BSM
    double rate = 0.05;
    double yield = 0.01;

    friend bool operator==(const HedgeConfig&, const HedgeConfig&) = default;
};

enum class HedgeScheme { BsmDual, WuZhu };

std::string_view to_string(HedgeScheme scheme) noexcept;

/// Throws HedgeConstraintError naming the first violated constraint:
/// K_d < K < K_u, K_d <= K_c <= K_u, T_h < min(T_o, T_c), max(T_o, T_c) < T.
/// Under WuZhu the horizon constraint is relaxed to T_h <= min(T_o, T_c).
void validate(const HedgeConfig& cfg, HedgeScheme scheme = HedgeScheme::BsmDual);

struct DualCoefficients {
    double h_down;
    double h_center;
    double h_up;
    double alpha_front;   // (T_h - T_o) / (T - T_h), negative
    double alpha_center;  // (T_h - T_c) / (T - T_h), negative
    double beta;          // (r - q) sqrt(T - T_h) / sigma
    double gamma;         // q (T - T_h)
};

/// Coefficients of the BSM-dual weight system evaluated on `cfg` as given.
/// h_x = (K_x - K) / (sigma K sqrt(T - T_h)).
DualCoefficients dual_coefficients(const HedgeConfig& cfg);

/// The configuration whose coefficients a scheme actually uses: BsmDual takes
/// `cfg` unchanged, WuZhu zeroes r and q and moves the horizon to T_o.
HedgeConfig scheme_config(const HedgeConfig& cfg, HedgeScheme scheme);

struct WeightSystem {
    std::array<std::array<double, 3>, 3> matrix;
    std::array<double, 3> rhs;
};

/// Rows: matched constant terms (1 + gamma h^2), first strike derivatives
/// (1 + beta h) h, and maturity derivatives h^2 - alpha; right-hand side
/// (1, 0, 1). Columns are ordered down, center, up.
WeightSystem weight_system(const DualCoefficients& c);

struct HedgeWeights {
    double down;
    double center;
    double up;
    HedgeScheme scheme;
    double determinant;
};

inline constexpr double kSingularDeterminant = 1e-12;

/// Closed-form 3x3 solve (Cramer's rule). Throws SingularHedgeSystem when
/// |det| < kSingularDeterminant.
HedgeWeights solve_weight_system(const DualCoefficients& c, HedgeScheme scheme);

/// Validates `cfg` for `scheme`, then solves the scheme's weight system.
HedgeWeights solve_weights(const HedgeConfig& cfg, HedgeScheme scheme);

/// A hedge error in currency and as a percentage of the hedged call's price.
struct HedgeAmount {
    double value;
    double pct;
};

/// Hedged call c(K, T) at the horizon, residual maturity T - T_h.
double hedged_call_at_horizon(const HedgeConfig& cfg, double spot);
/// Hedged call at setup, full maturity T.
double hedged_call_at_setup(const HedgeConfig& cfg, double spot);

/// Portfolio minus hedged call, all priced at T_h on `spot_at_horizon`.
HedgeAmount gross_error(const HedgeConfig& cfg, const HedgeWeights& w, double spot_at_horizon);

/// Portfolio minus hedged call at setup (time 0).
HedgeAmount net_cost(const HedgeConfig& cfg, const HedgeWeights& w, double spot_at_setup);

struct HedgeReport {
    double gross_error;
    double gross_error_pct;
    double net_cost;
    double net_cost_pct;
    double true_error;      // gross_error - net_cost * exp(r T_h)
    double true_error_pct;  // relative to the hedged call at T_h
};

HedgeReport true_error(const HedgeConfig& cfg, const HedgeWeights& w, double spot_at_setup,
                       double spot_at_horizon);

}  // namespace dualpricer
