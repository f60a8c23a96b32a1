#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "enumeration.hpp"
#include "graph.hpp"
#include "partition.hpp"
#include "spectral.hpp"
#include "wheel.hpp"

namespace wheelfree {

/// How members of the extremal set were confirmed to share the maximum.
enum class TieConfirmation { unique, cospectral, exact_integer_root, refined };

inline const char* to_string(TieConfirmation t) {
    switch (t) {
        case TieConfirmation::unique: return "unique";
        case TieConfirmation::cospectral: return "cospectral";
        case TieConfirmation::exact_integer_root: return "exact_integer_root";
        default: return "refined";
    }
}

struct SearchReport {
    int n = 0;
    MatrixKind kind = MatrixKind::adjacency;
    double max_radius = 0.0;
    std::vector<std::string> extremal;  // canonical graph6, sorted
    std::size_t class_count = 0;
    bool exhaustive = true;
    double elapsed_seconds = 0.0;
    TieConfirmation tie = TieConfirmation::unique;
    std::vector<bool> extremal_connected;
};

struct SearchOptions {
    double tie_tol = 1e-9;
    int threads = 1;
    Budget budget;
    bool allow_large = false;
};

namespace detail {

inline double fast_radius(const SymMatrix& m) {
    try {
        return power_iteration(m, 1e-12).radius;
    } catch (const convergence_error&) {
        return spectral_radius(m, 1e-12, EigenMethod::jacobi).radius;
    }
}

/// Decides whether `candidate` truly ties with `leader` at the maximum.
inline std::optional<TieConfirmation> confirm_tie(const Graph& leader, const Graph& candidate, MatrixKind kind,
                                                  double max_radius, double tie_tol) {
    const auto p = char_poly(leader, kind);
    const auto q = char_poly(candidate, kind);
    if (p == q) return TieConfirmation::cospectral;
    const double nearest = std::round(max_radius);
    if (std::abs(max_radius - nearest) <= tie_tol) {
        const Rational r = static_cast<long long>(nearest);
        if (p(r) == 0 && q(r) == 0) return TieConfirmation::exact_integer_root;
    }
    const double a = spectral_radius(graph_matrix(leader, kind), 1e-13).radius;
    const double b = spectral_radius(graph_matrix(candidate, kind), 1e-13).radius;
    if (std::abs(a - b) <= 1e-13 * std::max(1.0, a)) return TieConfirmation::refined;
    return std::nullopt;
}

}  // namespace detail

/// Maximum spectral radius over all wheel-free graphs of order n, with the set
/// of classes attaining it.
inline SearchReport max_spectral_radius(int n, MatrixKind kind, const SearchOptions& opts = {}) {
    if (n < 4) throw std::invalid_argument("search requires n >= 4");
    if (!(opts.tie_tol > 0)) throw std::invalid_argument("tie tolerance must be positive");
    const auto start = std::chrono::steady_clock::now();

    GeneratorConfig config;
    config.n = n;
    config.filter = GraphFilter::wheel_free;
    config.threads = opts.threads;
    config.budget = opts.budget;
    config.allow_large = opts.allow_large;

    struct Candidate {
        double radius;
        std::string form;
    };
    std::vector<Candidate> leaders;
    double best = -1.0;
    SearchReport report;
    report.n = n;
    report.kind = kind;

    const auto stats = for_each_graph(config, [&](const Graph& g, const std::string& form) {
        ++report.class_count;
        int max_degree = 0;
        for (Vertex v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
        // Row-sum upper bound on the largest eigenvalue.
        const double bound = kind == MatrixKind::adjacency ? max_degree : 2.0 * max_degree;
        if (bound < best - opts.tie_tol) return;
        const double r = detail::fast_radius(graph_matrix(g, kind));
        if (r < best - opts.tie_tol) return;
        if (r > best) {
            best = r;
            std::erase_if(leaders, [&](const Candidate& c) { return c.radius < best - opts.tie_tol; });
        }
        leaders.push_back({r, form});
    });
    report.exhaustive = stats.exhaustive;

    if (!leaders.empty()) {
        std::sort(leaders.begin(), leaders.end(), [](const Candidate& x, const Candidate& y) {
            return x.radius != y.radius ? x.radius > y.radius : x.form < y.form;
        });
        const Graph top = from_graph6(leaders.front().form);
        report.max_radius = spectral_radius(graph_matrix(top, kind), 1e-13).radius;
        std::vector<std::string> members{leaders.front().form};
        for (std::size_t i = 1; i < leaders.size(); ++i) {
            const auto how =
                detail::confirm_tie(top, from_graph6(leaders[i].form), kind, report.max_radius, opts.tie_tol);
            if (!how) continue;
            members.push_back(leaders[i].form);
            if (report.tie == TieConfirmation::unique || *how == TieConfirmation::refined) report.tie = *how;
        }
        std::sort(members.begin(), members.end());
        report.extremal = members;
        for (const auto& f : members) report.extremal_connected.push_back(is_connected(from_graph6(f)));
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

struct TheoremVerdict {
    int n = 0;
    bool pass = false;
    SearchReport report;
    double expected_radius = 0.0;
    std::vector<std::string> expected_extremal;  // canonical graph6, sorted
    std::string detail;
};

namespace detail {

inline void require_range(int lo, int hi, bool allow_large) {
    if (lo < 4 || hi < lo) throw std::invalid_argument("need 4 <= from <= to");
    if (hi > kSoftOrderCap && !allow_large)
        throw std::invalid_argument("orders above " + std::to_string(kSoftOrderCap) + " need allow_large");
}

inline TheoremVerdict judge(int n, SearchReport report, double expected_radius, std::vector<std::string> expected) {
    std::sort(expected.begin(), expected.end());
    TheoremVerdict v{n, false, std::move(report), expected_radius, std::move(expected), {}};
    if (!v.report.exhaustive) {
        v.detail = "search did not finish within budget";
        return v;
    }
    const double err = std::abs(v.report.max_radius - expected_radius);
    const bool set_ok = v.report.extremal == v.expected_extremal;
    v.pass = set_ok && err <= 1e-8;
    if (!set_ok)
        v.detail = "extremal set differs (" + std::to_string(v.report.extremal.size()) + " found, " +
                   std::to_string(v.expected_extremal.size()) + " expected)";
    else if (err > 1e-8)
        v.detail = "maximum differs from closed form by " + std::to_string(err);
    return v;
}

}  // namespace detail

/// Extremal adjacency set is exactly {H_n}, or {H_7, F} at n = 7, with the
/// maximum matching the closed form.
inline std::vector<TheoremVerdict> verify_theorem1(int lo, int hi, const SearchOptions& opts = {}) {
    detail::require_range(lo, hi, opts.allow_large);
    std::vector<TheoremVerdict> out;
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::string> expected{canonical_form(h_n(n)).graph6};
        if (n == 7) expected.push_back(canonical_form(graph_f()).graph6);
        out.push_back(detail::judge(n, max_spectral_radius(n, MatrixKind::adjacency, opts), closed_form_rho_a_hn(n),
                                    std::move(expected)));
    }
    return out;
}

/// Unique signless-Laplacian extremal graph K_2 ∇ (n-2)K_1.
inline std::vector<TheoremVerdict> verify_theorem2(int lo, int hi, const SearchOptions& opts = {}) {
    detail::require_range(lo, hi, opts.allow_large);
    std::vector<TheoremVerdict> out;
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::string> expected{canonical_form(matching_join(1, 0, n - 2)).graph6};
        out.push_back(detail::judge(n, max_spectral_radius(n, MatrixKind::signless_laplacian, opts),
                                    closed_form_rho_q(n), std::move(expected)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural diagnostics at the vertex maximising R_v

namespace detail {

inline int disjoint_p3_packing(const Graph& g, VertexSet remaining, int current, int& best) {
    if (current + remaining.size() / 3 <= best) return best;
    if (remaining.size() < 3) {
        best = std::max(best, current);
        return best;
    }
    const Vertex v = remaining.min();
    VertexSet rest = remaining;
    rest.erase(v);
    // v as the middle of a P_3.
    const auto around = g.neighbors(v) & rest;
    const auto ends = around.to_vector();
    for (std::size_t i = 0; i < ends.size(); ++i)
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
            VertexSet next = rest;
            next.erase(ends[i]);
            next.erase(ends[j]);
            disjoint_p3_packing(g, next, current + 1, best);
        }
    // v as an end: v - m - w.
    around.for_each([&](Vertex m) {
        ((g.neighbors(m) & rest) - VertexSet::single(v)).for_each([&](Vertex w) {
            VertexSet next = rest;
            next.erase(m);
            next.erase(w);
            disjoint_p3_packing(g, next, current + 1, best);
        });
    });
    // v unused.
    disjoint_p3_packing(g, rest, current, best);
    return best;
}

}  // namespace detail

/// Maximum number of vertex-disjoint P_3 subgraphs inside G[S], by exhaustive search.
inline int max_disjoint_p3(const Graph& g, VertexSet s) {
    require_subset(g, s);
    int best = 0;
    detail::disjoint_p3_packing(g, s, 0, best);
    return best;
}

struct StructuralDiagnostics {
    Vertex u = 0;
    std::int64_t r_u = 0;
    bool diameter_two_cover = false;  // V = {u} ∪ N(u) ∪ N_2(u)
    int p_u = 0;
    bool walk_bound_holds = false;    // R_u >= ((n+1)^2 - 1)/4
};

inline StructuralDiagnostics structural_diagnostics(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("structural diagnostics need a connected graph");
    StructuralDiagnostics d;
    d.r_u = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto r = walk_count_r(g, v);
        if (r > d.r_u) {
            d.r_u = r;
            d.u = v;
        }
    }
    const auto first = g.neighbors(d.u);
    const auto cover = VertexSet::single(d.u) | first | second_neighborhood(g, d.u);
    d.diameter_two_cover = cover == g.vertices();
    d.p_u = max_disjoint_p3(g, first);
    const std::int64_t n = g.order();
    d.walk_bound_holds = 4 * d.r_u >= (n + 1) * (n + 1) - 1;
    return d;
}

}  // namespace wheelfree
