#include "dualpricer/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace dualpricer {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

template <class T>
std::string number(T v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw ConfigError("cannot format number");
    return std::string(buf, end);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T v{};
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw ConfigError("invalid value for " + key + ": '" + text + "'");
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true") return true;
    if (text == "false") return false;
    throw ConfigError("invalid value for " + key + ": '" + text + "' (expected true or false)");
}

template <class E>
E parse_enum(const std::string& key, const std::string& text, std::initializer_list<E> values) {
    for (E v : values) {
        if (to_string(v) == text) return v;
    }
    throw ConfigError("invalid value for " + key + ": '" + text + "'");
}

// One entry per key: how to print it and how to read it back.
struct Field {
    std::string key;
    std::function<std::string(const ExperimentConfig&)> get;
    std::function<void(ExperimentConfig&, const std::string&)> set;
};

template <class T>
Field num(std::string key, T ExperimentConfig::*member) {
    return {key, [member](const ExperimentConfig& c) { return number(c.*member); },
            [key, member](ExperimentConfig& c, const std::string& v) { c.*member = parse_number<T>(key, v); }};
}

template <class T>
Field optional_num(std::string key, std::optional<T> ExperimentConfig::*member) {
    return {key,
            [member](const ExperimentConfig& c) { return (c.*member) ? number(*(c.*member)) : std::string(); },
            [key, member](ExperimentConfig& c, const std::string& v) {
                if (v.empty()) {
                    (c.*member).reset();
                } else {
                    c.*member = parse_number<T>(key, v);
                }
            }};
}

Field flag(std::string key, bool ExperimentConfig::*member) {
    return {key, [member](const ExperimentConfig& c) { return std::string(c.*member ? "true" : "false"); },
            [key, member](ExperimentConfig& c, const std::string& v) { c.*member = parse_bool(key, v); }};
}

// Numeric fields nested one level down (market.spot, hedge.strike, ...).
template <class Outer, class T>
Field nested(std::string key, Outer ExperimentConfig::*outer, T Outer::*member) {
    return {key, [outer, member](const ExperimentConfig& c) { return number(c.*outer.*member); },
            [key, outer, member](ExperimentConfig& c, const std::string& v) {
                c.*outer.*member = parse_number<T>(key, v);
            }};
}

const std::vector<Field>& fields() {
    static const std::vector<Field> all = {
        {"command", [](const ExperimentConfig& c) { return c.command; },
         [](ExperimentConfig& c, const std::string& v) { c.command = v; }},
        {"table", [](const ExperimentConfig& c) { return c.table; },
         [](ExperimentConfig& c, const std::string& v) { c.table = v; }},
        {"engine", [](const ExperimentConfig& c) { return std::string(to_string(c.engine)); },
         [](ExperimentConfig& c, const std::string& v) {
             c.engine = parse_enum("engine", v, {EngineChoice::Auto, EngineChoice::Analytic, EngineChoice::Lattice});
         }},
        {"option.right", [](const ExperimentConfig& c) { return std::string(to_string(c.option.right)); },
         [](ExperimentConfig& c, const std::string& v) {
             c.option.right = parse_enum("option.right", v, {Right::Call, Right::Put});
         }},
        {"option.style", [](const ExperimentConfig& c) { return std::string(to_string(c.option.style)); },
         [](ExperimentConfig& c, const std::string& v) {
             c.option.style = parse_enum("option.style", v, {Style::European, Style::American});
         }},
        nested("option.strike", &ExperimentConfig::option, &OptionSpec::strike),
        nested("option.maturity", &ExperimentConfig::option, &OptionSpec::maturity),
        nested("market.spot", &ExperimentConfig::market, &MarketState::spot),
        nested("market.rate", &ExperimentConfig::market, &MarketState::rate),
        nested("market.yield", &ExperimentConfig::market, &MarketState::yield),
        nested("market.vol", &ExperimentConfig::market, &MarketState::vol),
        nested("lattice.steps", &ExperimentConfig::lattice, &LatticeOptions::steps),
        {"lattice.tree", [](const ExperimentConfig& c) { return std::string(to_string(c.lattice.tree)); },
         [](ExperimentConfig& c, const std::string& v) {
             c.lattice.tree = parse_enum("lattice.tree", v, {TreeKind::Trigeorgis, TreeKind::Crr});
         }},
        {"lattice.greeks", [](const ExperimentConfig& c) { return std::string(to_string(c.lattice.greeks)); },
         [](ExperimentConfig& c, const std::string& v) {
             c.lattice.greeks =
                 parse_enum("lattice.greeks", v, {GreekScheme::ExtendedTree, GreekScheme::StepNodes});
         }},
        flag("dual", &ExperimentConfig::dual),
        flag("greeks", &ExperimentConfig::greeks),
        nested("hedge.strike", &ExperimentConfig::hedge, &HedgeConfig::strike),
        nested("hedge.maturity", &ExperimentConfig::hedge, &HedgeConfig::maturity),
        nested("hedge.strike_down", &ExperimentConfig::hedge, &HedgeConfig::strike_down),
        nested("hedge.strike_center", &ExperimentConfig::hedge, &HedgeConfig::strike_center),
        nested("hedge.strike_up", &ExperimentConfig::hedge, &HedgeConfig::strike_up),
        nested("hedge.front_maturity", &ExperimentConfig::hedge, &HedgeConfig::front_maturity),
        nested("hedge.center_maturity", &ExperimentConfig::hedge, &HedgeConfig::center_maturity),
        nested("hedge.horizon", &ExperimentConfig::hedge, &HedgeConfig::horizon),
        nested("hedge.local_vol", &ExperimentConfig::hedge, &HedgeConfig::local_vol),
        nested("hedge.rate", &ExperimentConfig::hedge, &HedgeConfig::rate),
        nested("hedge.yield", &ExperimentConfig::hedge, &HedgeConfig::yield),
        {"scheme", [](const ExperimentConfig& c) { return c.scheme ? std::string(to_string(*c.scheme)) : ""; },
         [](ExperimentConfig& c, const std::string& v) {
             if (v.empty()) {
                 c.scheme.reset();
             } else {
                 c.scheme = parse_enum("scheme", v, {HedgeScheme::BsmDual, HedgeScheme::WuZhu});
             }
         }},
        optional_num("spot_setup", &ExperimentConfig::spot_setup),
        optional_num("spot_horizon", &ExperimentConfig::spot_horizon),
        flag("sim", &ExperimentConfig::sim),
        num("drift", &ExperimentConfig::drift),
        num("paths", &ExperimentConfig::paths),
        optional_num("seed", &ExperimentConfig::seed),
        num("threads", &ExperimentConfig::threads),
        {"format", [](const ExperimentConfig& c) { return std::string(to_string(c.format)); },
         [](ExperimentConfig& c, const std::string& v) {
             c.format = parse_enum("format", v, {OutputFormat::Table, OutputFormat::Csv});
         }},
        {"output", [](const ExperimentConfig& c) { return c.output; },
         [](ExperimentConfig& c, const std::string& v) { c.output = v; }},
    };
    return all;
}

}  // namespace

std::string_view to_string(EngineChoice e) noexcept {
    switch (e) {
        case EngineChoice::Analytic: return "analytic";
        case EngineChoice::Lattice: return "lattice";
        default: return "auto";
    }
}

std::string_view to_string(OutputFormat f) noexcept {
    return f == OutputFormat::Csv ? "csv" : "table";
}

std::string_view to_string(TreeKind k) noexcept {
    return k == TreeKind::Crr ? "crr" : "trigeorgis";
}

std::string_view to_string(GreekScheme g) noexcept {
    return g == GreekScheme::StepNodes ? "step-nodes" : "extended";
}

std::string format_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    for (const Field& f : fields()) {
        out << f.key << " = " << f.get(cfg) << '\n';
    }
    return out.str();
}

ExperimentConfig parse_config(const std::string& text, const ExperimentConfig& base) {
    std::map<std::string, const Field*> index;
    for (const Field& f : fields()) index[f.key] = &f;

    ExperimentConfig cfg = base;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const auto it = index.find(key);
        if (it == index.end()) {
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        it->second->set(cfg, trim(std::string_view(body).substr(eq + 1)));
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, const ExperimentConfig& base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), base);
}

void save_config(const ExperimentConfig& cfg, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write config file " + path.string());
    out << format_config(cfg);
    if (!out) throw ConfigError("failed writing config file " + path.string());
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DUALPRICER_SEED")) {
        const std::string text = env;
        std::uint64_t v = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec == std::errc{} && end == text.data() + text.size() && !text.empty()) {
            return v;
        }
    }
    return 1;
}

}  // namespace dualpricer
