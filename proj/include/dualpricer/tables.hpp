#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dualpricer/hedge.hpp"
#include "dualpricer/lattice.hpp"

namespace dualpricer {

/// Inputs shared by the American put tables: puts struck at `strike`, one
/// year, 40% volatility, daily lattice steps.
struct PutTableParams {
    std::vector<double> spots{36.0, 38.0, 40.0, 42.0, 44.0};
    double strike = 40.0;
    double vol = 0.4;
    double maturity = 1.0;
    double rate = 0.06;
    double yield = 0.0;
    LatticeOptions lattice{};
};

struct Table1Row {
    double spot;
    double strike;
    double put;          // direct lattice American put
    double dual_spot;    // = strike
    double dual_strike;  // = spot
    double dual_call;    // lattice American call in the dual space
    double error_pct;    // (dual_call - put) / put
};

struct Table2Row {
    double spot;
    double strike;
    double put_delta;   // direct lattice
    double dual_call;
    double dual_delta;
    double delta_via_dual;
    double delta_error_pct;
    double put_gamma;   // direct lattice
    double dual_gamma;
    double gamma_via_dual;
    double gamma_error_pct;
};

struct Table3Row {
    double rate;          // domestic rate of the put
    double foreign_rate;  // yield of the put
    double spot;
    double strike;
    double american_put;   // lattice
    double european_call;  // closed-form dual call
    double error_pct;
};

struct HedgeTableRow {
    double spot;
    double hedged_call;
    double bsm_dual;
    double bsm_dual_pct;
    double wu_zhu;
    double wu_zhu_pct;
};

struct TrueErrorRow {
    double spot_at_horizon;
    double spot_at_setup;
    double bsm_dual;
    double bsm_dual_pct;
    double wu_zhu;
    double wu_zhu_pct;
};

struct SimTableParams {
    std::vector<double> drifts{0.04, 0.08};
    std::vector<double> spots{46.0, 48.0, 50.0, 52.0, 54.0};
    std::int64_t paths = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
};

struct SimTableRow {
    double drift;
    double spot;
    double bsm_mhe_pct;
    double bsm_mae_pct;
    double bsm_rmse;
    double wz_mhe_pct;
    double wz_mae_pct;
    double wz_rmse;
};

std::vector<Table1Row> table1(const PutTableParams& p = {});
std::vector<Table2Row> table2(const PutTableParams& p = {});
/// One panel per domestic rate; the put's yield is the foreign rate.
std::vector<Table3Row> table3(const PutTableParams& p = {}, std::vector<double> rates = {0.0, 0.03, 0.05},
                              double foreign_rate = 0.06);

std::vector<double> default_hedge_spots();  // 35, 40, ..., 85

/// Gross hedge errors at T_h.
std::vector<HedgeTableRow> table4(const HedgeConfig& cfg = {}, const std::vector<double>& spots = default_hedge_spots());
/// Net hedge cost at setup.
std::vector<HedgeTableRow> table5(const HedgeConfig& cfg = {}, const std::vector<double>& spots = default_hedge_spots());
/// True errors for every (spot at T_h, spot at 0) pair, T_h-major.
std::vector<TrueErrorRow> table6(const HedgeConfig& cfg = {}, const std::vector<double>& spots = {45.0, 50.0, 55.0});
std::vector<SimTableRow> table7(const HedgeConfig& cfg = {}, const SimTableParams& p = {});

/// A rendered table: labelled numeric columns with a print precision each.
struct ReportTable {
    std::string title;
    std::vector<std::string> columns;
    std::vector<int> precision;
    std::vector<std::vector<double>> rows;
};

/// Right-aligned columns at each column's precision.
std::string render_text(const ReportTable& table);
/// Header row plus shortest round-trip doubles, comma separated, LF endings.
std::string render_csv(const ReportTable& table);

ReportTable report(const std::vector<Table1Row>& rows);
ReportTable report(const std::vector<Table2Row>& rows);
ReportTable report(const std::vector<Table3Row>& rows);
/// `kind` is 4 or 5. With `only`, the other scheme's columns are dropped.
ReportTable report(const std::vector<HedgeTableRow>& rows, int kind, std::optional<HedgeScheme> only = {});
ReportTable report(const std::vector<TrueErrorRow>& rows, std::optional<HedgeScheme> only = {});
ReportTable report(const std::vector<SimTableRow>& rows, std::optional<HedgeScheme> only = {});

}  // namespace dualpricer
