#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "dualpricer/config.hpp"

using namespace dualpricer;

namespace {

ExperimentConfig unusual() {
    ExperimentConfig cfg;
    cfg.command = "hedge";
    cfg.table = "t6";
    cfg.engine = EngineChoice::Lattice;
    cfg.option = {Right::Put, Style::American, 40.1, 1.0 / 3.0};
    cfg.market = {36.000000000000007, 0.06, -0.0125, 0.4};
    cfg.lattice = {501, TreeKind::Crr, GreekScheme::StepNodes};
    cfg.dual = true;
    cfg.greeks = true;
    cfg.hedge.horizon = 1.0 / 12.0 - 5.0 / 365.0;
    cfg.hedge.local_vol = 0.1 + 0.2;
    cfg.scheme = HedgeScheme::WuZhu;
    cfg.spot_setup = 55.0;
    cfg.spot_horizon = 45.5;
    cfg.sim = true;
    cfg.drift = 0.08;
    cfg.paths = 123456;
    cfg.seed = 18446744073709551615ULL;
    cfg.threads = 3;
    cfg.format = OutputFormat::Csv;
    cfg.output = "out dir/result.csv";
    return cfg;
}

}  // namespace

TEST(Config, DefaultsRoundTrip) {
    const ExperimentConfig cfg;
    EXPECT_EQ(parse_config(format_config(cfg)), cfg);
}

TEST(Config, LosslessRoundTrip) {
    const ExperimentConfig cfg = unusual();
    EXPECT_EQ(parse_config(format_config(cfg)), cfg);
}

TEST(Config, FileRoundTrip) {
    const auto path = std::filesystem::temp_directory_path() / "dualpricer_config_test.cfg";
    save_config(unusual(), path);
    EXPECT_EQ(load_config(path), unusual());
    std::filesystem::remove(path);
}

TEST(Config, PartialFileKeepsBase) {
    const ExperimentConfig cfg = parse_config("# comment\n\ncommand = table\n  table=t4  \nscheme = wu-zhu\n");
    EXPECT_EQ(cfg.command, "table");
    EXPECT_EQ(cfg.table, "t4");
    EXPECT_EQ(cfg.scheme, HedgeScheme::WuZhu);
    EXPECT_EQ(cfg.hedge, HedgeConfig{});
}

TEST(Config, EmptyOptionalClears) {
    ExperimentConfig base;
    base.seed = 9;
    base.spot_setup = 50.0;
    const ExperimentConfig cfg = parse_config("seed =\nspot_setup=\n", base);
    EXPECT_FALSE(cfg.seed.has_value());
    EXPECT_FALSE(cfg.spot_setup.has_value());
}

TEST(Config, Errors) {
    EXPECT_THROW(parse_config("nonsense = 1\n"), ConfigError);
    EXPECT_THROW(parse_config("market.spot = 12x\n"), ConfigError);
    EXPECT_THROW(parse_config("dual = yes\n"), ConfigError);
    EXPECT_THROW(parse_config("option.right = straddle\n"), ConfigError);
    EXPECT_THROW(parse_config("just a line\n"), ConfigError);
    EXPECT_THROW(parse_config("paths = 1.5\n"), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/dir/x.cfg"), ConfigError);
}

TEST(Config, DefaultSeedFromEnvironment) {
    ::setenv("DUALPRICER_SEED", "77", 1);
    EXPECT_EQ(default_seed(), 77u);
    ::setenv("DUALPRICER_SEED", "not-a-number", 1);
    EXPECT_EQ(default_seed(), 1u);
    ::unsetenv("DUALPRICER_SEED");
    EXPECT_EQ(default_seed(), 1u);
}
