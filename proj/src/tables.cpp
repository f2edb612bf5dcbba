#include "dualpricer/tables.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dualpricer/analytic.hpp"
#include "dualpricer/duality.hpp"
#include "dualpricer/errors.hpp"
#include "dualpricer/simulate.hpp"

namespace dualpricer {

namespace {

double relative_pct(double value, double reference) {
    return 100.0 * (value - reference) / reference;
}

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    std::string s = buf;
    if (s == "-0" || (s.rfind("-0.", 0) == 0 && s.find_first_not_of("-0.") == std::string::npos)) {
        s.erase(0, 1);
    }
    return s;
}

std::string shortest(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) {
        throw Error("cannot format number");
    }
    return std::string(buf, end);
}

struct Column {
    std::string name;
    int precision;
};

// Builds a table from per-row columns, keeping only those flagged `keep`.
template <class Row, class Pick>
ReportTable build(std::string title, const std::vector<Column>& columns, const std::vector<bool>& keep,
                  const std::vector<Row>& rows, Pick pick) {
    ReportTable t;
    t.title = std::move(title);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (keep[c]) {
            t.columns.push_back(columns[c].name);
            t.precision.push_back(columns[c].precision);
        }
    }
    for (const Row& row : rows) {
        const std::vector<double> all = pick(row);
        std::vector<double> kept;
        for (std::size_t c = 0; c < all.size(); ++c) {
            if (keep[c]) kept.push_back(all[c]);
        }
        t.rows.push_back(std::move(kept));
    }
    return t;
}

// Column mask for tables laid out as <leading columns> <3 or 2 bsm> <same wz>.
std::vector<bool> scheme_mask(std::size_t leading, std::size_t per_scheme, std::optional<HedgeScheme> only) {
    std::vector<bool> keep(leading + 2 * per_scheme, true);
    if (only) {
        const std::size_t drop = *only == HedgeScheme::BsmDual ? leading + per_scheme : leading;
        std::fill_n(keep.begin() + static_cast<std::ptrdiff_t>(drop), per_scheme, false);
    }
    return keep;
}

std::string scheme_suffix(std::optional<HedgeScheme> only) {
    return only ? " [" + std::string(to_string(*only)) + "]" : "";
}

}  // namespace

std::vector<Table1Row> table1(const PutTableParams& p) {
    const Engine engine = LatticeEngine{p.lattice};
    std::vector<Table1Row> rows;
    for (double spot : p.spots) {
        const OptionSpec put{Right::Put, Style::American, p.strike, p.maturity};
        const MarketState market{spot, p.rate, p.yield, p.vol};
        const double direct = direct_price(put, market, engine);
        const double dual = price_via_dual(put, market, engine);
        rows.push_back({spot, p.strike, direct, p.strike, spot, dual, relative_pct(dual, direct)});
    }
    return rows;
}

std::vector<Table2Row> table2(const PutTableParams& p) {
    const Engine engine = LatticeEngine{p.lattice};
    std::vector<Table2Row> rows;
    for (double spot : p.spots) {
        const OptionSpec put{Right::Put, Style::American, p.strike, p.maturity};
        const MarketState market{spot, p.rate, p.yield, p.vol};
        const LatticeResult direct = lattice_evaluate(put, market, p.lattice);
        const Problem dual = to_dual(put, market).dual;
        const LatticeResult call = lattice_evaluate(dual.spec, dual.market, p.lattice);
        const double delta = delta_via_dual(put, market, engine);
        const double gamma = gamma_via_dual(put, market, engine);
        rows.push_back({spot, p.strike, direct.delta, call.price, call.delta, delta,
                        relative_pct(delta, direct.delta), direct.gamma, call.gamma, gamma,
                        relative_pct(gamma, direct.gamma)});
    }
    return rows;
}

std::vector<Table3Row> table3(const PutTableParams& p, std::vector<double> rates, double foreign_rate) {
    const Engine engine = LatticeEngine{p.lattice};
    std::vector<Table3Row> rows;
    for (double rate : rates) {
        for (double spot : p.spots) {
            const OptionSpec put{Right::Put, Style::American, p.strike, p.maturity};
            const MarketState market{spot, rate, foreign_rate, p.vol};
            const double american = direct_price(put, market, engine);
            const double european = price_currency_put_approx(put, market).price;
            rows.push_back({rate, foreign_rate, spot, p.strike, american, european,
                            relative_pct(european, american)});
        }
    }
    return rows;
}

std::vector<double> default_hedge_spots() {
    std::vector<double> spots;
    for (int s = 35; s <= 85; s += 5) spots.push_back(s);
    return spots;
}

std::vector<HedgeTableRow> table4(const HedgeConfig& cfg, const std::vector<double>& spots) {
    const HedgeWeights bsm = solve_weights(cfg, HedgeScheme::BsmDual);
    const HedgeWeights wz = solve_weights(cfg, HedgeScheme::WuZhu);
    std::vector<HedgeTableRow> rows;
    for (double spot : spots) {
        const HedgeAmount a = gross_error(cfg, bsm, spot);
        const HedgeAmount b = gross_error(cfg, wz, spot);
        rows.push_back({spot, hedged_call_at_horizon(cfg, spot), a.value, a.pct, b.value, b.pct});
    }
    return rows;
}

std::vector<HedgeTableRow> table5(const HedgeConfig& cfg, const std::vector<double>& spots) {
    const HedgeWeights bsm = solve_weights(cfg, HedgeScheme::BsmDual);
    const HedgeWeights wz = solve_weights(cfg, HedgeScheme::WuZhu);
    std::vector<HedgeTableRow> rows;
    for (double spot : spots) {
        const HedgeAmount a = net_cost(cfg, bsm, spot);
        const HedgeAmount b = net_cost(cfg, wz, spot);
        rows.push_back({spot, hedged_call_at_setup(cfg, spot), a.value, a.pct, b.value, b.pct});
    }
    return rows;
}

std::vector<TrueErrorRow> table6(const HedgeConfig& cfg, const std::vector<double>& spots) {
    const HedgeWeights bsm = solve_weights(cfg, HedgeScheme::BsmDual);
    const HedgeWeights wz = solve_weights(cfg, HedgeScheme::WuZhu);
    std::vector<TrueErrorRow> rows;
    for (double at_horizon : spots) {
        for (double at_setup : spots) {
            const HedgeReport a = true_error(cfg, bsm, at_setup, at_horizon);
            const HedgeReport b = true_error(cfg, wz, at_setup, at_horizon);
            rows.push_back({at_horizon, at_setup, a.true_error, a.true_error_pct, b.true_error, b.true_error_pct});
        }
    }
    return rows;
}

std::vector<SimTableRow> table7(const HedgeConfig& cfg, const SimTableParams& p) {
    std::vector<SimTableRow> rows;
    for (double drift : p.drifts) {
        for (double spot : p.spots) {
            SimConfig sim{spot, drift, p.paths, p.seed, cfg, HedgeScheme::BsmDual, p.threads};
            const SimSummary a = run_hedge_sim(sim);
            sim.scheme = HedgeScheme::WuZhu;
            const SimSummary b = run_hedge_sim(sim);
            rows.push_back({drift, spot, a.mhe_pct, a.mae_pct, a.rmse, b.mhe_pct, b.mae_pct, b.rmse});
        }
    }
    return rows;
}

std::string render_text(const ReportTable& table) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back(table.columns);
    for (const auto& row : table.rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line.push_back(fixed(row[c], table.precision[c]));
        }
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(table.columns.size(), 0);
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            width[c] = std::max(width[c], line[c].size());
        }
    }

    std::ostringstream out;
    if (!table.title.empty()) {
        out << table.title << '\n';
    }
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0) out << "  ";
            out << std::string(width[c] - line[c].size(), ' ') << line[c];
        }
        out << '\n';
    }
    return out.str();
}

std::string render_csv(const ReportTable& table) {
    std::ostringstream out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << shortest(row[c]);
        }
        out << '\n';
    }
    return out.str();
}

ReportTable report(const std::vector<Table1Row>& rows) {
    const std::vector<Column> cols{{"put_spot", 0},  {"put_strike", 0},  {"put_price", 3},  {"call_spot", 0},
                                   {"call_strike", 0}, {"call_price", 3}, {"error_pct", 3}};
    return build("Table 1: American put vs dual American call", cols, std::vector<bool>(cols.size(), true), rows,
                 [](const Table1Row& r) {
                     return std::vector<double>{r.spot, r.strike, r.put, r.dual_spot, r.dual_strike, r.dual_call,
                                                r.error_pct};
                 });
}

ReportTable report(const std::vector<Table2Row>& rows) {
    const std::vector<Column> cols{{"put_spot", 0},    {"put_strike", 0},  {"put_delta", 4},
                                   {"call_price", 3},  {"call_delta", 4},  {"delta_via_dual", 4},
                                   {"delta_error_pct", 3}, {"put_gamma", 4}, {"call_gamma", 4},
                                   {"gamma_via_dual", 4}, {"gamma_error_pct", 3}};
    return build("Table 2: American put Greeks via the dual call", cols, std::vector<bool>(cols.size(), true), rows,
                 [](const Table2Row& r) {
                     return std::vector<double>{r.spot,           r.strike,          r.put_delta, r.dual_call,
                                                r.dual_delta,     r.delta_via_dual,  r.delta_error_pct,
                                                r.put_gamma,      r.dual_gamma,      r.gamma_via_dual,
                                                r.gamma_error_pct};
                 });
}

ReportTable report(const std::vector<Table3Row>& rows) {
    const std::vector<Column> cols{{"rate", 2},  {"foreign_rate", 2},  {"put_spot", 0}, {"put_strike", 0},
                                   {"american_put", 3}, {"european_call", 3}, {"error_pct", 3}};
    return build("Table 3: American currency put vs European dual call", cols,
                 std::vector<bool>(cols.size(), true), rows, [](const Table3Row& r) {
                     return std::vector<double>{r.rate,         r.foreign_rate,  r.spot, r.strike,
                                                r.american_put, r.european_call, r.error_pct};
                 });
}

ReportTable report(const std::vector<HedgeTableRow>& rows, int kind, std::optional<HedgeScheme> only) {
    if (kind != 4 && kind != 5) {
        throw DomainError("hedge table kind must be 4 or 5");
    }
    const bool gross = kind == 4;
    const std::string what = gross ? "gross_error" : "net_cost";
    const std::vector<Column> cols{{gross ? "spot_at_horizon" : "spot_at_setup", 0},
                                   {"hedged_call", 3},
                                   {"bsm_dual_" + what, 3},
                                   {"bsm_dual_" + what + "_pct", 2},
                                   {"wu_zhu_" + what, 3},
                                   {"wu_zhu_" + what + "_pct", 2}};
    const std::string title = gross ? "Table 4: gross hedge errors at the horizon" : "Table 5: net hedge cost at setup";
    return build(title + scheme_suffix(only), cols, scheme_mask(2, 2, only), rows, [](const HedgeTableRow& r) {
        return std::vector<double>{r.spot, r.hedged_call, r.bsm_dual, r.bsm_dual_pct, r.wu_zhu, r.wu_zhu_pct};
    });
}

ReportTable report(const std::vector<TrueErrorRow>& rows, std::optional<HedgeScheme> only) {
    const std::vector<Column> cols{{"spot_at_horizon", 0},       {"spot_at_setup", 0},
                                   {"bsm_dual_true_error", 3},   {"bsm_dual_true_error_pct", 2},
                                   {"wu_zhu_true_error", 3},     {"wu_zhu_true_error_pct", 2}};
    return build("Table 6: true hedge errors" + scheme_suffix(only), cols, scheme_mask(2, 2, only), rows,
                 [](const TrueErrorRow& r) {
                     return std::vector<double>{r.spot_at_horizon, r.spot_at_setup, r.bsm_dual,
                                                r.bsm_dual_pct,    r.wu_zhu,        r.wu_zhu_pct};
                 });
}

ReportTable report(const std::vector<SimTableRow>& rows, std::optional<HedgeScheme> only) {
    const std::vector<Column> cols{{"drift", 2},           {"spot_at_setup", 0},   {"bsm_dual_mhe_pct", 2},
                                   {"bsm_dual_mae_pct", 2}, {"bsm_dual_rmse", 3},  {"wu_zhu_mhe_pct", 2},
                                   {"wu_zhu_mae_pct", 2},   {"wu_zhu_rmse", 3}};
    return build("Table 7: simulated true hedge errors" + scheme_suffix(only), cols, scheme_mask(2, 3, only), rows,
                 [](const SimTableRow& r) {
                     return std::vector<double>{r.drift,      r.spot,       r.bsm_mhe_pct, r.bsm_mae_pct,
                                                r.bsm_rmse,   r.wz_mhe_pct, r.wz_mae_pct,  r.wz_rmse};
                 });
}

}  // namespace dualpricer
