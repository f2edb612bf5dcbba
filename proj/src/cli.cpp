#include "dualpricer/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dualpricer/config.hpp"
#include "dualpricer/duality.hpp"
#include "dualpricer/simulate.hpp"
#include "dualpricer/tables.hpp"

namespace dualpricer {

namespace {

const std::vector<std::string> kTableNames{"t1", "t2", "t3", "t4", "t5", "t6", "t7"};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enum options go through their text spelling; CLI11's own enum support
// clashes with the library's to_string overloads.
template <class E>
CLI::Option* add_enum(CLI::App& app, const std::string& name, E& target, const std::string& help,
                      std::initializer_list<E> values) {
    std::map<std::string, E> table;
    std::vector<std::string> names;
    for (E v : values) {
        table.emplace(std::string(to_string(v)), v);
        names.emplace_back(to_string(v));
    }
    return app
        .add_option_function<std::string>(
            name, [&target, table](const std::string& s) { target = table.at(s); }, help)
        ->check(CLI::IsMember(names));
}

// Finds --config before CLI11 runs so the file can seed every default.
std::string find_config_path(int argc, const char* const* argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return argv[i + 1];
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    return {};
}

std::string render(const ReportTable& t, OutputFormat format) {
    return format == OutputFormat::Csv ? render_csv(t) : render_text(t);
}

std::string render_all(const std::vector<ReportTable>& tables, OutputFormat format) {
    std::string text;
    for (const ReportTable& t : tables) {
        if (!text.empty()) text += '\n';
        text += render(t, format);
    }
    return text;
}

double diff_pct(double dual, double direct) {
    return direct == 0.0 ? 0.0 : 100.0 * (dual - direct) / direct;
}

std::string run_price(const ExperimentConfig& cfg) {
    EngineChoice choice = cfg.engine;
    if (choice == EngineChoice::Auto) {
        choice = cfg.option.style == Style::American ? EngineChoice::Lattice : EngineChoice::Analytic;
    }
    const Engine engine = choice == EngineChoice::Lattice ? Engine{LatticeEngine{cfg.lattice}} : Engine{AnalyticEngine{}};
    const OptionSpec& spec = cfg.option;
    const MarketState& market = cfg.market;
    spec.validate();
    market.validate();

    ReportTable t;
    t.title = std::string(to_string(spec.style)) + " " + std::string(to_string(spec.right)) + ", " +
              (choice == EngineChoice::Lattice
                   ? "lattice (" + std::to_string(cfg.lattice.steps) + " steps, " +
                         std::string(to_string(cfg.lattice.tree)) + ")"
                   : std::string("analytic"));
    std::vector<double> row;
    auto add = [&](const std::string& name, int precision, double v) {
        t.columns.push_back(name);
        t.precision.push_back(precision);
        row.push_back(v);
    };

    double price = 0.0, delta = 0.0, gamma = 0.0;
    if (const auto* lattice = std::get_if<LatticeEngine>(&engine); lattice && cfg.greeks) {
        const LatticeResult r = lattice_evaluate(spec, market, lattice->options);
        // The extended tree quotes its own price; report the ordinary tree's.
        price = direct_price(spec, market, engine);
        delta = r.delta;
        gamma = r.gamma;
    } else {
        price = direct_price(spec, market, engine);
        if (cfg.greeks) {
            delta = direct_delta(spec, market, engine);
            gamma = direct_gamma(spec, market, engine);
        }
    }

    add("price", 3, price);
    if (cfg.dual) {
        const double p = price_via_dual(spec, market, engine);
        add("dual_price", 3, p);
        add("price_diff_pct", 3, diff_pct(p, price));
    }
    if (cfg.greeks) {
        add("delta", 4, delta);
        if (cfg.dual) {
            const double d = delta_via_dual(spec, market, engine);
            add("dual_delta", 4, d);
            add("delta_diff_pct", 3, diff_pct(d, delta));
        }
        add("gamma", 4, gamma);
        if (cfg.dual) {
            const double g = gamma_via_dual(spec, market, engine);
            add("dual_gamma", 4, g);
            add("gamma_diff_pct", 3, diff_pct(g, gamma));
        }
    }
    t.rows.push_back(std::move(row));
    return render(t, cfg.format);
}

std::string run_hedge(const ExperimentConfig& cfg) {
    const HedgeScheme scheme = cfg.scheme.value_or(HedgeScheme::BsmDual);
    const HedgeWeights w = solve_weights(cfg.hedge, scheme);

    std::vector<ReportTable> tables;
    tables.push_back(ReportTable{"hedge weights [" + std::string(to_string(scheme)) + "]",
                                 {"w_down", "w_center", "w_up", "determinant"},
                                 {4, 4, 4, 6},
                                 {{w.down, w.center, w.up, w.determinant}}});

    if (cfg.sim) {
        SimConfig sim{cfg.spot_setup.value_or(cfg.hedge.strike), cfg.drift, cfg.paths,
                      cfg.seed.value_or(default_seed()), cfg.hedge, scheme, cfg.threads};
        const SimSummary s = run_hedge_sim(sim);
        tables.push_back(ReportTable{"simulated true hedge error",
                                     {"spot_at_setup", "drift", "paths", "seed", "mhe_pct", "mae_pct", "rmse"},
                                     {2, 2, 0, 0, 2, 2, 3},
                                     {{sim.spot0, sim.drift, static_cast<double>(s.paths),
                                       static_cast<double>(sim.seed), s.mhe_pct, s.mae_pct, s.rmse}}});
    } else if (cfg.spot_setup && cfg.spot_horizon) {
        const HedgeReport r = true_error(cfg.hedge, w, *cfg.spot_setup, *cfg.spot_horizon);
        tables.push_back(ReportTable{"hedge report",
                                     {"spot_at_setup", "spot_at_horizon", "gross_error", "gross_error_pct",
                                      "net_cost", "net_cost_pct", "true_error", "true_error_pct"},
                                     {2, 2, 3, 2, 3, 2, 3, 2},
                                     {{*cfg.spot_setup, *cfg.spot_horizon, r.gross_error, r.gross_error_pct,
                                       r.net_cost, r.net_cost_pct, r.true_error, r.true_error_pct}}});
    } else if (cfg.spot_horizon) {
        const HedgeAmount a = gross_error(cfg.hedge, w, *cfg.spot_horizon);
        tables.push_back(ReportTable{"gross hedge error",
                                     {"spot_at_horizon", "gross_error", "gross_error_pct"},
                                     {2, 3, 2},
                                     {{*cfg.spot_horizon, a.value, a.pct}}});
    } else if (cfg.spot_setup) {
        const HedgeAmount a = net_cost(cfg.hedge, w, *cfg.spot_setup);
        tables.push_back(ReportTable{"net hedge cost",
                                     {"spot_at_setup", "net_cost", "net_cost_pct"},
                                     {2, 3, 2},
                                     {{*cfg.spot_setup, a.value, a.pct}}});
    }
    return render_all(tables, cfg.format);
}

std::string run_table(const ExperimentConfig& cfg) {
    const std::string& name = cfg.table;
    PutTableParams put;
    put.lattice = cfg.lattice;

    if (name == "t1") return render(report(table1(put)), cfg.format);
    if (name == "t2") return render(report(table2(put)), cfg.format);
    if (name == "t3") return render(report(table3(put)), cfg.format);
    if (name == "t4") return render(report(table4(cfg.hedge), 4, cfg.scheme), cfg.format);
    if (name == "t5") return render(report(table5(cfg.hedge), 5, cfg.scheme), cfg.format);
    if (name == "t6") return render(report(table6(cfg.hedge), cfg.scheme), cfg.format);
    if (name == "t7") {
        SimTableParams sim;
        sim.paths = cfg.paths;
        sim.seed = cfg.seed.value_or(default_seed());
        sim.threads = cfg.threads;
        return render(report(table7(cfg.hedge, sim), cfg.scheme), cfg.format);
    }
    throw UsageError("unknown table '" + name + "' (expected t1..t7)");
}

void add_hedge_options(CLI::App& app, HedgeConfig& h) {
    app.add_option("-K,--strike", h.strike, "hedged call strike");
    app.add_option("-T,--maturity", h.maturity, "hedged call maturity (years)");
    app.add_option("--Kd", h.strike_down, "lower hedging strike");
    app.add_option("--Kc", h.strike_center, "center hedging strike");
    app.add_option("--Ku", h.strike_up, "upper hedging strike");
    app.add_option("--To", h.front_maturity, "maturity of the K_d and K_u calls");
    app.add_option("--Tc", h.center_maturity, "maturity of the K_c call");
    app.add_option("--Th", h.horizon, "hedge horizon (years)");
    app.add_option("--sigma", h.local_vol, "volatility sigma(K, T_h)");
    app.add_option("-r,--rate", h.rate, "risk-free rate");
    app.add_option("-q,--yield", h.yield, "dividend yield");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    ExperimentConfig cfg;
    const std::string config_path = find_config_path(argc, argv);
    try {
        if (!config_path.empty()) cfg = load_config(config_path);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    const bool has_config = !config_path.empty();

    CLI::App app{"Option pricing in the dual space, put-call duality and static hedges", "dualpricer"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    std::string config_arg, save_path;
    app.add_option("--config", config_arg, "read the experiment from a key = value file");
    app.add_option("--save-config", save_path, "write the effective experiment to a file");
    add_enum(app, "--format", cfg.format, "table or csv", {OutputFormat::Table, OutputFormat::Csv});
    app.add_option("-o,--output", cfg.output, "write output to a file instead of stdout");

    // price
    auto* price = app.add_subcommand("price", "price an option directly and via its dual");
    add_enum(*price, "--right", cfg.option.right, "call or put", {Right::Call, Right::Put})
        ->required(!has_config);
    add_enum(*price, "--style", cfg.option.style, "european or american", {Style::European, Style::American});
    price->add_option("-S,--spot", cfg.market.spot, "spot price")->required(!has_config);
    price->add_option("-K,--strike", cfg.option.strike, "strike")->required(!has_config);
    price->add_option("-r,--rate", cfg.market.rate, "risk-free rate (continuous)");
    price->add_option("-q,--yield", cfg.market.yield, "dividend yield or foreign rate (continuous)");
    price->add_option("--vol", cfg.market.vol, "annual volatility")->required(!has_config);
    price->add_option("-T,--maturity", cfg.option.maturity, "maturity in years")->required(!has_config);
    add_enum(*price, "--engine", cfg.engine, "auto, analytic or lattice", {EngineChoice::Auto, EngineChoice::Analytic, EngineChoice::Lattice});
    price->add_option("--steps", cfg.lattice.steps, "lattice steps")->check(CLI::PositiveNumber);
    add_enum(*price, "--tree", cfg.lattice.tree, "lattice parameterization", {TreeKind::Trigeorgis, TreeKind::Crr});
    add_enum(*price, "--greek-scheme", cfg.lattice.greeks, "where lattice Greeks are read", {GreekScheme::ExtendedTree, GreekScheme::StepNodes});
    price->add_flag("--dual", cfg.dual, "also price through the dual problem");
    price->add_flag("--greeks", cfg.greeks, "also report delta and gamma");

    // shared between table and hedge
    std::string scheme_arg;
    double spot_setup = 0.0, spot_horizon = 0.0;
    std::uint64_t seed = 0;

    auto* table = app.add_subcommand("table", "reproduce one of the reference tables");
    std::string table_name = cfg.table;
    table->add_option("name", table_name, "t1 .. t7")->check(CLI::IsMember(kTableNames))->required(!has_config);
    add_hedge_options(*table, cfg.hedge);
    table->add_option("--steps", cfg.lattice.steps, "lattice steps for t1-t3")->check(CLI::PositiveNumber);
    add_enum(*table, "--tree", cfg.lattice.tree, "lattice parameterization", {TreeKind::Trigeorgis, TreeKind::Crr});
    add_enum(*table, "--greek-scheme", cfg.lattice.greeks, "where lattice Greeks are read", {GreekScheme::ExtendedTree, GreekScheme::StepNodes});
    auto* table_scheme = table->add_option("--scheme", scheme_arg, "show only bsm-dual or wu-zhu columns")
                             ->check(CLI::IsMember({"bsm-dual", "wu-zhu"}));
    table->add_option("--paths", cfg.paths, "simulated paths for t7")->check(CLI::PositiveNumber);
    auto* table_seed = table->add_option("--seed", seed, "seed for t7 (default: DUALPRICER_SEED or 1)");
    table->add_option("--threads", cfg.threads, "worker threads for t7 (0 = all cores)");

    auto* hedge = app.add_subcommand("hedge", "solve static hedge weights and report hedge errors");
    add_hedge_options(*hedge, cfg.hedge);
    auto* hedge_scheme =
        hedge->add_option("--scheme", scheme_arg, "bsm-dual or wu-zhu")->check(CLI::IsMember({"bsm-dual", "wu-zhu"}));
    auto* opt_setup = hedge->add_option("-S,--spot0", spot_setup, "spot at setup")->check(CLI::PositiveNumber);
    auto* opt_horizon =
        hedge->add_option("--spot-th", spot_horizon, "spot at the hedge horizon")->check(CLI::PositiveNumber);
    hedge->add_flag("--sim", cfg.sim, "simulate the true hedge error under GBM");
    hedge->add_option("--drift", cfg.drift, "real-world drift for --sim");
    hedge->add_option("--paths", cfg.paths, "simulated paths")->check(CLI::PositiveNumber);
    auto* hedge_seed = hedge->add_option("--seed", seed, "seed (default: DUALPRICER_SEED or 1)");
    hedge->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (!scheme_arg.empty()) {
        cfg.scheme = scheme_arg == "wu-zhu" ? HedgeScheme::WuZhu : HedgeScheme::BsmDual;
    }
    if (table_seed->count() > 0 || hedge_seed->count() > 0) cfg.seed = seed;
    if (opt_setup->count() > 0) cfg.spot_setup = spot_setup;
    if (opt_horizon->count() > 0) cfg.spot_horizon = spot_horizon;
    (void)table_scheme;
    (void)hedge_scheme;

    if (price->parsed()) {
        cfg.command = "price";
    } else if (table->parsed()) {
        cfg.command = "table";
        cfg.table = table_name;
    } else if (hedge->parsed()) {
        cfg.command = "hedge";
    } else if (!has_config) {
        err << app.help();
        return 2;
    }

    try {
        if (!save_path.empty()) save_config(cfg, save_path);

        std::string text;
        if (cfg.command == "price") {
            text = run_price(cfg);
        } else if (cfg.command == "table") {
            text = run_table(cfg);
        } else if (cfg.command == "hedge") {
            text = run_hedge(cfg);
        } else {
            throw UsageError("unknown command '" + cfg.command + "'");
        }

        if (cfg.output.empty()) {
            out << text;
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            file << text;
            if (!file) throw Error("cannot write " + cfg.output);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace dualpricer
