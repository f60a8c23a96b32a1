#pragma once

#include <array>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace wheelfree {

/// A wheel subgraph: a hub adjacent to every vertex of a cycle (the rim).
struct WheelWitness {
    Vertex hub = -1;
    std::vector<Vertex> rim;

    bool operator==(const WheelWitness&) const = default;
};

/// Hub adjacent to all rim vertices, rim of length >= 3, distinct, consecutive
/// rim vertices adjacent (cyclically), hub not on the rim.
inline bool validate_witness(const Graph& g, const WheelWitness& w) {
    if (w.rim.size() < 3 || w.hub < 0 || w.hub >= g.order()) return false;
    VertexSet seen;
    for (std::size_t i = 0; i < w.rim.size(); ++i) {
        const Vertex v = w.rim[i];
        if (v < 0 || v >= g.order() || v == w.hub || seen.contains(v)) return false;
        seen.insert(v);
        if (!g.has_edge(w.hub, v)) return false;
        if (!g.has_edge(v, w.rim[(i + 1) % w.rim.size()])) return false;
    }
    return true;
}

/// True when G[N(v)] is a forest: e = |S| - components.
inline bool neighborhood_is_forest(const Graph& g, Vertex v) {
    const auto s = g.neighbors(v);
    if (s.size() < 3) return true;
    int twice = 0;
    s.for_each([&](Vertex w) { twice += std::popcount(g.row(w) & s.bits()); });
    const int edges = twice / 2;
    if (edges < 3) return true;
    if (edges >= s.size()) return false;
    return edges == s.size() - component_count(g, s);
}

/// Wheel-free iff every open neighborhood induces a forest.
inline bool is_wheel_free(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (!neighborhood_is_forest(g, v)) return false;
    return true;
}

namespace detail {

/// Length of a shortest cycle in G[S], or 0 when G[S] is a forest.
inline int girth_within(const Graph& g, VertexSet s) {
    int best = 0;
    s.for_each([&](Vertex root) {
        std::array<int, kMaxOrder> dist;
        std::array<int, kMaxOrder> parent;
        dist.fill(-1);
        std::vector<Vertex> queue{root};
        dist[root] = 0;
        parent[root] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            (g.neighbors(x) & s).for_each([&](Vertex y) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    const int len = dist[x] + dist[y] + 1;
                    if (best == 0 || len < best) best = len;
                }
            });
        }
    });
    return best;
}

/// Depth-first search for the lexicographically smallest cycle of exactly
/// `length` vertices whose minimum vertex is path[0], listed in the direction
/// that makes the second vertex smaller than the last.
inline bool extend_cycle(const Graph& g, VertexSet allowed, int length,
                         const std::array<int, kMaxOrder>& dist_home, std::vector<Vertex>& path,
                         VertexSet used) {
    const Vertex tail = path.back();
    const Vertex home = path.front();
    const int placed = static_cast<int>(path.size());
    if (placed == length) return g.has_edge(tail, home) && path[1] < path.back();
    bool found = false;
    (g.neighbors(tail) & allowed & VertexSet(~used.bits())).for_each([&](Vertex next) {
        if (found) return;
        // After placing `next`, length - placed - 1 more vertices plus the closing edge remain.
        if (dist_home[next] < 0 || dist_home[next] > length - placed) return;
        path.push_back(next);
        used.insert(next);
        if (extend_cycle(g, allowed, length, dist_home, path, used)) {
            found = true;
            return;
        }
        used.erase(next);
        path.pop_back();
    });
    return found;
}

inline std::vector<Vertex> smallest_shortest_cycle(const Graph& g, VertexSet s) {
    const int length = girth_within(g, s);
    if (length == 0) return {};
    for (Vertex home : s.to_vector()) {
        const VertexSet allowed = s - VertexSet::range(0, home);
        std::array<int, kMaxOrder> dist;
        dist.fill(-1);
        std::vector<Vertex> queue{home};
        dist[home] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head)
            (g.neighbors(queue[head]) & allowed).for_each([&](Vertex y) {
                if (dist[y] < 0) {
                    dist[y] = dist[queue[head]] + 1;
                    queue.push_back(y);
                }
            });
        std::vector<Vertex> path{home};
        if (extend_cycle(g, allowed, length, dist, path, VertexSet::single(home))) return path;
    }
    return {};
}

}  // namespace detail

/// Lowest-index hub whose neighborhood holds a cycle; rim is the shortest such
/// cycle, lexicographically smallest among those.
inline std::optional<WheelWitness> find_wheel_witness(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (neighborhood_is_forest(g, v)) continue;
        auto rim = detail::smallest_shortest_cycle(g, g.neighbors(v));
        return WheelWitness{v, std::move(rim)};
    }
    return std::nullopt;
}

namespace detail {

inline bool cycle_search_for_hub(const Graph& g, std::vector<Vertex>& path, VertexSet on_path) {
    const Vertex home = path.front();
    const Vertex tail = path.back();
    if (path.size() >= 3 && g.has_edge(tail, home) && path[1] < tail) {
        std::uint64_t common = g.vertices().bits() & ~on_path.bits();
        for (auto v : path) common &= g.row(v);
        if (common != 0) return true;
    }
    bool found = false;
    const VertexSet later = g.vertices() - VertexSet::range(0, home + 1);
    (g.neighbors(tail) & later & VertexSet(~on_path.bits())).for_each([&](Vertex next) {
        if (found) return;
        path.push_back(next);
        on_path.insert(next);
        found = cycle_search_for_hub(g, path, on_path);
        on_path.erase(next);
        path.pop_back();
    });
    return found;
}

}  // namespace detail

/// Independent oracle: walk every cycle of g and test whether some vertex off
/// the cycle is adjacent to all of it. Exponential; intended for order <= 12.
inline bool brute_force_contains_wheel(const Graph& g) {
    for (Vertex home = 0; home < g.order(); ++home) {
        std::vector<Vertex> path{home};
        if (detail::cycle_search_for_hub(g, path, VertexSet::single(home))) return true;
    }
    return false;
}

enum class Fact2Kind { p3_in_common_neighborhood, k2_in_adjacent_common_neighborhood };

struct Fact2Violation {
    Vertex u;
    Vertex v;
    Fact2Kind kind;
    bool operator==(const Fact2Violation&) const = default;
};

/// For every pair u < v: G[N(u) ∩ N(v)] must be P_3-free, and K_2-free when uv is an edge.
inline std::vector<Fact2Violation> check_fact2(const Graph& g) {
    std::vector<Fact2Violation> out;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            const auto common = g.neighbors(u) & g.neighbors(v);
            bool has_p3 = false;
            bool has_k2 = false;
            common.for_each([&](Vertex w) {
                const int inside = (g.neighbors(w) & common).size();
                if (inside >= 1) has_k2 = true;
                if (inside >= 2) has_p3 = true;
            });
            if (has_p3) out.push_back({u, v, Fact2Kind::p3_in_common_neighborhood});
            if (has_k2 && g.has_edge(u, v))
                out.push_back({u, v, Fact2Kind::k2_in_adjacent_common_neighborhood});
        }
    }
    return out;
}

}  // namespace wheelfree
