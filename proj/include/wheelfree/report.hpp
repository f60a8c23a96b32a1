#pragma once

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "graph.hpp"
#include "search.hpp"
#include "spectral.hpp"
#include "wheel.hpp"

namespace wheelfree {

enum class Format { json, csv, graph6 };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "graph6") return Format::graph6;
    throw std::invalid_argument("unknown format '" + s + "'");
}

/// Ten significant digits.
inline std::string format_radius(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

inline double round_radius(double x) { return std::stod(format_radius(x)); }

// ---------------------------------------------------------------------------
// Candidate tables: the forms (aK_2 ∪ bK_1) ∇ cK_1 left as possible extremal
// graphs, for each admissible d_u.

struct TableRow {
    int n = 0;
    int d_u = 0;
    std::string family;
    double radius = 0.0;
    bool wheel_free = false;
};

inline std::string family_name(int n, const MatchingJoinShape& s) {
    if (n >= 4 && s == h_n_shape(n)) return "H_" + std::to_string(n);
    return "(" + std::to_string(s.pairs) + "K2+" + std::to_string(s.singles) + "K1)v" + std::to_string(s.independent) +
           "K1";
}

inline TableRow make_row(int n, int du, const MatchingJoinShape& s) {
    const Graph g = matching_join(s.pairs, s.singles, s.independent);
    return {n, du, family_name(n, s), rho_a(g), is_wheel_free(g)};
}

/// Rows with a tree neighborhood holding one P_3 and b = 0:
/// (floor((dbar+2)/2) K_2 ∪ (dbar mod 2) K_1) ∇ (d_u - 1) K_1, dbar = n - 1 - d_u.
inline std::vector<TableRow> table_one_rows(int n) {
    if (n < 8) throw std::invalid_argument("table rows need n >= 8");
    std::vector<int> degrees;
    if (n % 2 == 1) degrees = {(n + 1) / 2, (n + 3) / 2, (n + 5) / 2};
    else degrees = {(n + 2) / 2, (n + 4) / 2};
    std::vector<TableRow> rows;
    for (int du : degrees) {
        const int dbar = n - 1 - du;
        rows.push_back(make_row(n, du, {(dbar + 2) / 2, dbar % 2, du - 1}));
    }
    return rows;
}

/// Rows with a P_3-free neighborhood: (floor(d_u/2) K_2 ∪ (d_u mod 2) K_1) ∇ (n - d_u) K_1.
inline std::vector<TableRow> table_two_rows(int n) {
    if (n < 8) throw std::invalid_argument("table rows need n >= 8");
    std::vector<int> degrees;
    if (n % 2 == 1) degrees = {(n + 1) / 2};
    else degrees = {n / 2, (n + 2) / 2};
    std::vector<TableRow> rows;
    for (int du : degrees) rows.push_back(make_row(n, du, {du / 2, du % 2, n - du}));
    return rows;
}

/// Columns: n, d_u, family, radius, wheel_free.
inline std::string emit_table(const std::vector<TableRow>& rows, Format format) {
    if (format == Format::json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n},
                           {"d_u", r.d_u},
                           {"family", r.family},
                           {"radius", round_radius(r.radius)},
                           {"wheel_free", r.wheel_free}});
        return arr.dump(2) + "\n";
    }
    if (format != Format::csv) throw std::invalid_argument("tables are emitted as json or csv");
    std::ostringstream out;
    out << "n,d_u,family,radius,wheel_free\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.d_u << ',' << r.family << ',' << format_radius(r.radius) << ','
            << (r.wheel_free ? "true" : "false") << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// JSON records

inline nlohmann::ordered_json to_json(const SearchReport& r) {
    return {{"n", r.n},
            {"kind", to_string(r.kind)},
            {"max_radius", round_radius(r.max_radius)},
            {"extremal", r.extremal},
            {"class_count", r.class_count},
            {"exhaustive", r.exhaustive},
            {"elapsed", r.elapsed_seconds},
            {"tie_confirmation", to_string(r.tie)},
            {"extremal_connected", r.extremal_connected}};
}

inline nlohmann::ordered_json to_json(const TheoremVerdict& v, int theorem) {
    nlohmann::ordered_json j{{"n", v.n},
                             {"verdict", v.pass ? "PASS" : "FAIL"},
                             {"max_radius", round_radius(v.report.max_radius)},
                             {"expected_radius", round_radius(v.expected_radius)},
                             {"closed_form", theorem == 1 ? closed_form_rho_a_text(v.n) : closed_form_rho_q_text(v.n)},
                             {"extremal", v.report.extremal},
                             {"expected_extremal", v.expected_extremal},
                             {"class_count", v.report.class_count},
                             {"exhaustive", v.report.exhaustive},
                             {"tie_confirmation", to_string(v.report.tie)},
                             {"elapsed", v.report.elapsed_seconds}};
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

inline nlohmann::ordered_json to_json(const SpectralResult& s) {
    return {{"radius", round_radius(s.radius)},
            {"perron", s.perron},
            {"residual", s.residual},
            {"method", to_string(s.method)},
            {"iterations", s.iterations}};
}

inline nlohmann::ordered_json witness_json(const std::optional<WheelWitness>& w) {
    if (!w) return nullptr;
    return {{"hub", w->hub}, {"rim", w->rim}};
}

}  // namespace wheelfree
