#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "dualpricer/errors.hpp"
#include "dualpricer/tables.hpp"

using namespace dualpricer;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

std::vector<std::vector<double>> parse_csv_body(const std::string& csv) {
    std::vector<std::vector<double>> rows;
    const auto lines = split(csv, '\n');
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<double> row;
        for (const auto& cell : split(lines[i], ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

// Numeric cells of a rendered text table (title and header skipped).
std::vector<std::vector<std::string>> parse_text_body(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    const auto lines = split(text, '\n');
    for (std::size_t i = 2; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::vector<std::string> cells;
        std::string cell;
        while (in >> cell) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

}  // namespace

TEST(Table1, ShapeAndDefinitions) {
    const auto rows = table1();
    ASSERT_EQ(rows.size(), 5u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.dual_spot, r.strike);
        EXPECT_EQ(r.dual_strike, r.spot);
        EXPECT_NEAR(r.error_pct, 100.0 * (r.dual_call - r.put) / r.put, 1e-12);
    }
    EXPECT_NEAR(rows[0].put, 7.108, 5e-4);
}

TEST(Table2, ErrorsAreRelativeToDirectGreeks) {
    for (const auto& r : table2()) {
        EXPECT_NEAR(r.delta_error_pct, 100.0 * (r.delta_via_dual - r.put_delta) / r.put_delta, 1e-12);
        EXPECT_NEAR(r.gamma_error_pct, 100.0 * (r.gamma_via_dual - r.put_gamma) / r.put_gamma, 1e-12);
        EXPECT_NEAR(r.delta_via_dual, (r.dual_call - r.strike * r.dual_delta) / r.spot, 1e-12);
    }
}

TEST(Table3, ThreePanels) {
    const auto rows = table3();
    ASSERT_EQ(rows.size(), 15u);
    EXPECT_EQ(rows[0].rate, 0.0);
    EXPECT_EQ(rows[5].rate, 0.03);
    EXPECT_EQ(rows[10].rate, 0.05);
    for (const auto& r : rows) EXPECT_EQ(r.foreign_rate, 0.06);
}

TEST(HedgeTables, Shapes) {
    EXPECT_EQ(table4().size(), 11u);
    EXPECT_EQ(table5().size(), 11u);
    const auto t6 = table6();
    ASSERT_EQ(t6.size(), 9u);
    EXPECT_EQ(t6[1].spot_at_horizon, 45.0);
    EXPECT_EQ(t6[1].spot_at_setup, 50.0);
    EXPECT_NEAR(t6[2].bsm_dual, 0.210, 5e-4);
    EXPECT_NEAR(t6[2].bsm_dual_pct, 22.88, 5e-3);
}

TEST(Table7, SmallRunShape) {
    SimTableParams p;
    p.paths = 200;
    const auto rows = table7({}, p);
    ASSERT_EQ(rows.size(), 10u);
    EXPECT_EQ(rows[0].drift, 0.04);
    EXPECT_EQ(rows[5].drift, 0.08);
    EXPECT_EQ(rows[9].spot, 54.0);
}

TEST(Report, SchemeFilterDropsColumns) {
    const auto rows = table4();
    const ReportTable both = report(rows, 4);
    const ReportTable wz = report(rows, 4, HedgeScheme::WuZhu);
    const ReportTable bsm = report(rows, 4, HedgeScheme::BsmDual);
    EXPECT_EQ(both.columns.size(), 6u);
    ASSERT_EQ(wz.columns.size(), 4u);
    EXPECT_EQ(wz.columns[2], "wu_zhu_gross_error");
    EXPECT_EQ(bsm.columns[2], "bsm_dual_gross_error");
    EXPECT_EQ(wz.rows[3][2], rows[3].wu_zhu);
    EXPECT_THROW(report(rows, 6), DomainError);
}

TEST(Render, CsvFormat) {
    const ReportTable t{"title", {"a", "b"}, {2, 3}, {{1.5, -0.25}, {0.1, 3.0}}};
    EXPECT_EQ(render_csv(t), "a,b\n1.5,-0.25\n0.1,3\n");
}

TEST(Render, TextAlignedAtPrecision) {
    const ReportTable t{"title", {"a", "long_name"}, {2, 3}, {{1.5, -0.25}, {10.0, 3.0}}};
    EXPECT_EQ(render_text(t), "title\n    a  long_name\n 1.50     -0.250\n10.00      3.000\n");
}

TEST(Render, NoNegativeZero) {
    const ReportTable t{"", {"x"}, {2}, {{-0.001}}};
    EXPECT_EQ(render_text(t), "   x\n0.00\n");
}

TEST(Render, CsvRoundTripsAndAgreesWithText) {
    const std::vector<ReportTable> tables{report(table1()), report(table4(), 4), report(table6())};
    for (const ReportTable& t : tables) {
        const auto csv = parse_csv_body(render_csv(t));
        const auto text = parse_text_body(render_text(t));
        ASSERT_EQ(csv.size(), t.rows.size());
        ASSERT_EQ(text.size(), t.rows.size());
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            for (std::size_t c = 0; c < t.columns.size(); ++c) {
                EXPECT_EQ(csv[i][c], t.rows[i][c]);  // lossless
                std::string printed = fixed(csv[i][c], t.precision[c]);
                if (std::stod(printed) == 0.0 && printed[0] == '-') printed.erase(0, 1);
                EXPECT_EQ(printed, text[i][c]);
            }
        }
    }
}
