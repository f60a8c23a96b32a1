#include <gtest/gtest.h>

#include "wheelfree/report.hpp"

using namespace wheelfree;

TEST(Report, FormatRadius) {
    EXPECT_EQ(format_radius(6.0), "6");
    EXPECT_EQ(format_radius(4.531128874149275), "4.531128874");
    EXPECT_EQ(format_radius(5.23606797749979), "5.236067977");
    EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Report, TableOneAtEleven) {
    const auto rows = table_one_rows(11);
    ASSERT_EQ(rows.size(), 3U);
    EXPECT_EQ(rows[0].d_u, 6);
    EXPECT_EQ(rows[0].family, "H_11");
    EXPECT_NEAR(rows[0].radius, 6.0, 1e-9);
    for (const auto& r : rows) {
        EXPECT_TRUE(r.wheel_free);
        EXPECT_LE(r.radius, rows[0].radius + 1e-12);
    }
    EXPECT_THROW(table_one_rows(7), std::invalid_argument);
}

TEST(Report, TableTwoAtEight) {
    const auto rows = table_two_rows(8);
    ASSERT_EQ(rows.size(), 2U);
    EXPECT_EQ(rows[0].family, "H_8");
    EXPECT_NEAR(rows[0].radius, 4.5311, 1e-4);
    EXPECT_EQ(emit_table(rows, Format::csv),
              "n,d_u,family,radius,wheel_free\n"
              "8,4,H_8,4.531128874,true\n"
              "8,5,(2K2+1K1)v3K1,4.315070407,true\n");
}

TEST(Report, TableRowsNeverBeatTheExtremalGraph) {
    for (int n = 8; n <= 30; ++n) {
        const double top = closed_form_rho_a_hn(n);
        for (const auto& rows : {table_one_rows(n), table_two_rows(n)})
            for (const auto& r : rows) {
                EXPECT_TRUE(r.wheel_free);
                EXPECT_LE(r.radius, top + 1e-9) << n << " " << r.family;
            }
    }
}

TEST(Report, EmptyTable) {
    EXPECT_EQ(emit_table({}, Format::csv), "n,d_u,family,radius,wheel_free\n");
    EXPECT_EQ(emit_table({}, Format::json), "[]\n");
    EXPECT_THROW(emit_table({}, Format::graph6), std::invalid_argument);
}

TEST(Report, JsonSchemas) {
    auto keys = [](const nlohmann::ordered_json& j) {
        std::vector<std::string> out;
        for (const auto& [k, v] : j.items()) out.push_back(k);
        return out;
    };
    const auto t = nlohmann::ordered_json::parse(emit_table(table_two_rows(8), Format::json));
    EXPECT_EQ(keys(t[0]), (std::vector<std::string>{"n", "d_u", "family", "radius", "wheel_free"}));

    SearchReport r;
    r.n = 5;
    EXPECT_EQ(keys(to_json(r)), (std::vector<std::string>{"n", "kind", "max_radius", "extremal", "class_count",
                                                          "exhaustive", "elapsed", "tie_confirmation",
                                                          "extremal_connected"}));
    TheoremVerdict v;
    v.n = 6;
    v.report = r;
    EXPECT_EQ(keys(to_json(v, 1)),
              (std::vector<std::string>{"n", "verdict", "max_radius", "expected_radius", "closed_form", "extremal",
                                        "expected_extremal", "class_count", "exhaustive", "tie_confirmation",
                                        "elapsed"}));
    EXPECT_EQ(to_json(v, 2)["closed_form"], "(8+sqrt(48))/2");
    EXPECT_EQ(keys(to_json(spectral_radius(adjacency_matrix(path(3))))),
              (std::vector<std::string>{"radius", "perron", "residual", "method", "iterations"}));
    EXPECT_TRUE(witness_json(std::nullopt).is_null());
    EXPECT_EQ(witness_json(find_wheel_witness(complete(4)))["hub"], 0);
}
