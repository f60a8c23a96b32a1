#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "wheel.hpp"

namespace wheelfree {

/// Hereditary filters the generator can prune by.
enum class GraphFilter { all, wheel_free, connected_wheel_free };

inline const char* to_string(GraphFilter f) {
    switch (f) {
        case GraphFilter::all: return "all";
        case GraphFilter::wheel_free: return "wheel_free";
        default: return "connected_wheel_free";
    }
}

inline constexpr int kSoftOrderCap = 9;
inline constexpr int kHardOrderCap = 12;

struct Budget {
    std::optional<double> max_seconds;
    std::optional<std::size_t> max_graphs;
};

struct GeneratorConfig {
    int n = 1;
    GraphFilter filter = GraphFilter::all;
    Budget budget;
    int threads = 1;
    bool allow_large = false;  // permits n above the soft cap

    // Resume support: parents with index <= resume_after_parent are skipped and
    // seed_forms are treated as already emitted.
    long long resume_after_parent = -1;
    std::vector<std::string> seed_forms;

    // Called after each parent of the target order has been merged.
    std::function<void(long long parent_index, std::size_t parent_count, std::size_t emitted)> progress;
};

struct EnumerationStats {
    std::size_t emitted = 0;
    std::size_t candidates = 0;
    std::size_t parents = 0;
    long long last_completed_parent = -1;
    bool exhaustive = true;
    double elapsed_seconds = 0.0;
};

namespace detail {

/// Predicate check for the vertex n-1 newly attached to a parent that already
/// satisfies the filter; only N(v) and the neighborhoods it touched can change.
inline bool accepts_augmented(const Graph& g, GraphFilter filter) {
    if (filter == GraphFilter::all) return true;
    const Vertex v = g.order() - 1;
    if (filter == GraphFilter::connected_wheel_free && g.degree(v) == 0 && g.order() > 1) return false;
    if (!neighborhood_is_forest(g, v)) return false;
    bool ok = true;
    g.neighbors(v).for_each([&](Vertex w) {
        if (ok && !neighborhood_is_forest(g, w)) ok = false;
    });
    return ok;
}

inline Graph augment(const Graph& parent, std::uint64_t mask) {
    Graph g(parent.order() + 1);
    for (int u = 0; u < parent.order(); ++u)
        parent.neighbors(u).for_each([&](Vertex w) {
            if (u < w) g.add_edge(u, w);
        });
    VertexSet(mask).for_each([&](Vertex w) { g.add_edge(parent.order(), w); });
    return g;
}

/// Canonical forms of accepted one-vertex extensions of a parent, first
/// occurrence by mask order.
inline std::vector<std::string> expand_parent(const std::string& parent_form, GraphFilter filter,
                                              std::size_t& candidates) {
    const Graph parent = from_graph6(parent_form);
    std::vector<std::string> out;
    std::unordered_set<std::string> local;
    const std::uint64_t limit = std::uint64_t{1} << parent.order();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Graph g = augment(parent, mask);
        ++candidates;
        if (!accepts_augmented(g, filter)) continue;
        auto form = canonical_form(g).graph6;
        if (local.insert(form).second) out.push_back(std::move(form));
    }
    return out;
}

using Clock = std::chrono::steady_clock;

struct RunState {
    Clock::time_point start = Clock::now();
    std::optional<double> max_seconds;
    bool timed_out() const {
        return max_seconds && std::chrono::duration<double>(Clock::now() - start).count() > *max_seconds;
    }
};

/// Expands parents[first, last) with up to `threads` workers; results per parent.
inline std::vector<std::vector<std::string>> expand_batch(const std::vector<std::string>& parents, std::size_t first,
                                                          std::size_t last, GraphFilter filter, int threads,
                                                          std::size_t& candidates) {
    std::vector<std::vector<std::string>> results(last - first);
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(last - first)));
    std::vector<std::size_t> counts(workers, 0);
    auto work = [&](int id) {
        for (std::size_t i = first + id; i < last; i += workers)
            results[i - first] = expand_parent(parents[i], filter, counts[id]);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
    }
    for (auto c : counts) candidates += c;
    return results;
}

/// One level of generation. Emits canonical forms through `sink` in
/// (parent index, mask) order; returns false when stopped by the budget.
inline bool generate_level(const std::vector<std::string>& parents, GraphFilter filter, int threads,
                           const RunState& state, std::optional<std::size_t> max_graphs, long long resume_after,
                           std::unordered_set<std::string>& seen, EnumerationStats& stats,
                           const std::function<void(const std::string&)>& sink,
                           const std::function<void(long long, std::size_t, std::size_t)>& progress) {
    const std::size_t batch = static_cast<std::size_t>(std::max(1, threads)) * 16;
    std::size_t first = resume_after < 0 ? 0 : static_cast<std::size_t>(resume_after + 1);
    while (first < parents.size()) {
        if (state.timed_out()) return false;
        const std::size_t last = std::min(parents.size(), first + batch);
        auto results = expand_batch(parents, first, last, filter, threads, stats.candidates);
        for (std::size_t i = 0; i < results.size(); ++i) {
            for (auto& form : results[i]) {
                if (seen.contains(form)) continue;
                if (max_graphs && stats.emitted >= *max_graphs) return false;
                seen.insert(form);
                ++stats.emitted;
                sink(form);
            }
            stats.last_completed_parent = static_cast<long long>(first + i);
            ++stats.parents;
            if (progress) progress(stats.last_completed_parent, parents.size(), stats.emitted);
        }
        first = last;
    }
    return true;
}

}  // namespace detail

/// Streams one canonical representative per isomorphism class of order
/// config.n passing the filter. Each graph of order n is grown from the
/// representatives of order n-1 by adding a vertex with every possible
/// neighborhood; pruning is sound because the filters are closed under
/// deleting a suitable vertex.
inline EnumerationStats for_each_graph(const GeneratorConfig& config,
                                       const std::function<void(const Graph&, const std::string&)>& sink) {
    if (config.n < 1 || config.n > kHardOrderCap)
        throw std::invalid_argument("enumeration order must be in 1.." + std::to_string(kHardOrderCap));
    if (config.n > kSoftOrderCap && !config.allow_large)
        throw std::invalid_argument("orders above " + std::to_string(kSoftOrderCap) + " need allow_large");

    detail::RunState state;
    state.max_seconds = config.budget.max_seconds;
    EnumerationStats stats;

    std::vector<std::string> level{to_graph6(Graph(1))};
    for (int order = 2; order < config.n; ++order) {
        std::vector<std::string> next;
        std::unordered_set<std::string> seen;
        EnumerationStats inner;
        const bool done = detail::generate_level(level, config.filter, config.threads, state, std::nullopt, -1, seen,
                                                 inner, [&](const std::string& f) { next.push_back(f); }, {});
        stats.candidates += inner.candidates;
        if (!done) {
            stats.exhaustive = false;
            stats.elapsed_seconds = std::chrono::duration<double>(detail::Clock::now() - state.start).count();
            return stats;
        }
        level = std::move(next);
    }

    std::unordered_set<std::string> seen(config.seed_forms.begin(), config.seed_forms.end());
    auto emit = [&](const std::string& form) { sink(from_graph6(form), form); };
    if (config.n == 1) {
        if (!seen.contains(level.front()) && !(config.budget.max_graphs && *config.budget.max_graphs == 0)) {
            ++stats.emitted;
            emit(level.front());
        } else if (config.budget.max_graphs && *config.budget.max_graphs == 0) {
            stats.exhaustive = false;
        }
        stats.last_completed_parent = 0;
    } else {
        stats.last_completed_parent = config.resume_after_parent;
        const bool done =
            detail::generate_level(level, config.filter, config.threads, state, config.budget.max_graphs,
                                   config.resume_after_parent, seen, stats, emit, config.progress);
        stats.exhaustive = done;
    }
    stats.elapsed_seconds = std::chrono::duration<double>(detail::Clock::now() - state.start).count();
    return stats;
}

inline std::vector<Graph> enumerate_graphs(const GeneratorConfig& config, EnumerationStats* stats = nullptr) {
    std::vector<Graph> out;
    auto s = for_each_graph(config, [&](const Graph& g, const std::string&) { out.push_back(g); });
    if (stats) *stats = s;
    return out;
}

inline std::vector<Graph> enumerate_wheel_free(int n, int threads = 1) {
    GeneratorConfig config;
    config.n = n;
    config.filter = GraphFilter::wheel_free;
    config.threads = threads;
    config.allow_large = true;
    return enumerate_graphs(config);
}

// ---------------------------------------------------------------------------
// Checkpoints: plain text, one integer per line (order, last completed parent).

struct Checkpoint {
    int order = 0;
    long long parent_index = -1;
    bool operator==(const Checkpoint&) const = default;
};

inline void write_checkpoint(const std::string& path, const Checkpoint& cp) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + path);
    out << cp.order << '\n' << cp.parent_index << '\n';
}

inline std::optional<Checkpoint> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Checkpoint cp;
    if (!(in >> cp.order >> cp.parent_index)) throw std::runtime_error("malformed checkpoint " + path);
    return cp;
}

}  // namespace wheelfree
