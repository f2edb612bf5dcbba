#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "dualpricer/errors.hpp"
#include "dualpricer/hedge.hpp"
#include "dualpricer/lattice.hpp"
#include "dualpricer/types.hpp"

namespace dualpricer {

class ConfigError : public Error {
public:
    using Error::Error;
};

enum class EngineChoice { Auto, Analytic, Lattice };
enum class OutputFormat { Table, Csv };

/// Everything one CLI run needs. Stored on disk as `key = value` lines;
/// blank lines and lines starting with '#' are ignored.
struct ExperimentConfig {
    std::string command = "price";  // price | table | hedge
    std::string table = "t1";

    // price
    EngineChoice engine = EngineChoice::Auto;
    OptionSpec option{};
    MarketState market{};
    LatticeOptions lattice{};
    bool dual = false;
    bool greeks = false;

    // hedge and tables 4-7
    HedgeConfig hedge{};
    std::optional<HedgeScheme> scheme;  // unset: both where a table shows both
    std::optional<double> spot_setup;
    std::optional<double> spot_horizon;
    bool sim = false;
    double drift = 0.04;
    std::int64_t paths = 10000;
    std::optional<std::uint64_t> seed;  // unset: DUALPRICER_SEED, else 1
    unsigned threads = 0;

    OutputFormat format = OutputFormat::Table;
    std::string output;  // empty: stdout

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

std::string format_config(const ExperimentConfig& cfg);
/// Starts from `base` and applies every key in `text`. Throws ConfigError on
/// unknown keys or unparsable values.
ExperimentConfig parse_config(const std::string& text, const ExperimentConfig& base = {});

ExperimentConfig load_config(const std::filesystem::path& path, const ExperimentConfig& base = {});
void save_config(const ExperimentConfig& cfg, const std::filesystem::path& path);

// Enum spellings shared by the config file and the command line.
std::string_view to_string(EngineChoice e) noexcept;
std::string_view to_string(OutputFormat f) noexcept;
std::string_view to_string(TreeKind k) noexcept;
std::string_view to_string(GreekScheme g) noexcept;

/// Seed used when none is configured: DUALPRICER_SEED if set and valid, else 1.
std::uint64_t default_seed();

}  // namespace dualpricer
