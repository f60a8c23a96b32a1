#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wheelfree {

using Vertex = int;

inline constexpr int kMaxOrder = 64;

/// A set of vertex indices packed into one machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet range(int lo, int hi) {
        VertexSet s;
        for (int v = lo; v < hi; ++v) s.insert(v);
        return s;
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr Vertex min() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (auto b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    // Iterates set members in increasing order.
    template <typename F>
    constexpr void for_each(F&& f) const {
        for (auto b = bits_; b != 0; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b)));
    }

private:
    std::uint64_t bits_ = 0;
};

/// Simple undirected graph on at most 64 vertices; adjacency is one bit row per vertex.
class Graph {
public:
    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > kMaxOrder)
            throw std::invalid_argument("graph order " + std::to_string(n) + " outside 1..64");
    }

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(0, n_); }
    VertexSet neighbors(Vertex v) const { return VertexSet(rows_[check(v)]); }
    int degree(Vertex v) const { return std::popcount(rows_[check(v)]); }
    std::uint64_t row(Vertex v) const { return rows_[v]; }

    bool has_edge(Vertex u, Vertex v) const { return (rows_[check(u)] >> check(v)) & 1U; }

    void add_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
    }

    void remove_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        rows_[u] &= ~(std::uint64_t{1} << v);
        rows_[v] &= ~(std::uint64_t{1} << u);
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
        return twice / 2;
    }

    // Symmetry, no loops, no bits beyond n-1.
    bool valid() const {
        const auto mask = vertices().bits();
        for (int v = 0; v < n_; ++v) {
            if ((rows_[v] & ~mask) != 0 || ((rows_[v] >> v) & 1U)) return false;
            for (auto b = rows_[v]; b != 0; b &= b - 1)
                if (!((rows_[std::countr_zero(b)] >> v) & 1U)) return false;
        }
        for (int v = n_; v < kMaxOrder; ++v)
            if (rows_[v] != 0) return false;
        return true;
    }

    bool operator==(const Graph&) const = default;

private:
    Vertex check(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                                    std::to_string(n_));
        return v;
    }

    int n_;
    std::array<std::uint64_t, kMaxOrder> rows_{};
};

// ---------------------------------------------------------------------------
// Standard graphs

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires at least 3 vertices");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

/// W_n = K_1 join C_{n-1}; the hub is vertex 0.
inline Graph wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel requires at least 4 vertices");
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        g.add_edge(0, v);
        g.add_edge(v, v + 1 < n ? v + 1 : 1);
    }
    return g;
}

/// Star K_{1,k}; the center is vertex 0.
inline Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

// ---------------------------------------------------------------------------
// Composition

namespace detail {

inline void require_order(long long n) {
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("resulting order " + std::to_string(n) + " outside 1..64");
}

inline void copy_into(Graph& dst, const Graph& src, int offset) {
    for (int u = 0; u < src.order(); ++u)
        src.neighbors(u).for_each([&](Vertex v) {
            if (u < v) dst.add_edge(u + offset, v + offset);
        });
}

}  // namespace detail

/// Vertices of g keep their indices; vertices of h are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    detail::require_order(static_cast<long long>(g.order()) + h.order());
    Graph out(g.order() + h.order());
    detail::copy_into(out, g, 0);
    detail::copy_into(out, h, g.order());
    return out;
}

inline Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

inline Graph k_copies(int k, const Graph& g) {
    if (k < 1) throw std::invalid_argument("k_copies needs k >= 1");
    detail::require_order(static_cast<long long>(k) * g.order());
    Graph out(k * g.order());
    for (int i = 0; i < k; ++i) detail::copy_into(out, g, i * g.order());
    return out;
}

/// Relabels g so that vertex v becomes perm[v].
inline Graph permute(const Graph& g, const std::vector<Vertex>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation size does not match graph order");
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p < 0 || p >= g.order() || seen[p]) throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        g.neighbors(u).for_each([&](Vertex v) {
            if (u < v) out.add_edge(perm[u], perm[v]);
        });
    return out;
}

// ---------------------------------------------------------------------------
// Families

/// (pairs*K_2 ∪ singles*K_1) ∇ independent*K_1.
///
/// Layout: the matched pairs occupy (0,1), (2,3), ...; the unmatched clique-side
/// vertices follow, and the independent side comes last.
inline Graph matching_join(int pairs, int singles, int independent) {
    if (pairs < 0 || singles < 0 || independent < 0)
        throw std::invalid_argument("matching_join parameters must be nonnegative");
    const long long left = 2LL * pairs + singles;
    detail::require_order(left + independent);
    Graph g(static_cast<int>(left + independent));
    for (int i = 0; i < pairs; ++i) g.add_edge(2 * i, 2 * i + 1);
    for (int u = 0; u < left; ++u)
        for (int v = static_cast<int>(left); v < g.order(); ++v) g.add_edge(u, v);
    return g;
}

struct MatchingJoinShape {
    int pairs;
    int singles;
    int independent;
    bool operator==(const MatchingJoinShape&) const = default;
};

/// Parameters of the extremal graph H_n in matching_join form, by n mod 4.
inline MatchingJoinShape h_n_shape(int n) {
    if (n < 4) throw std::invalid_argument("H_n requires n >= 4");
    switch (n % 4) {
        case 1: return {(n - 1) / 4, 0, (n + 1) / 2};
        case 3: return {(n + 1) / 4, 0, (n - 1) / 2};
        case 0: return {n / 4, 0, n / 2};
        default: return {(n - 2) / 4, 1, n / 2};
    }
}

inline Graph h_n(int n) {
    const auto s = h_n_shape(n);
    return matching_join(s.pairs, s.singles, s.independent);
}

/// The graph F: complement of the 7-cycle.
inline Graph graph_f() { return complement(cycle(7)); }

/// G(a,b): a tree with center u_0 (vertex 0) carrying a leaves u_1..u_a and
/// b pendant paths u_0 - v_i - w_i.
///
/// The shape is read off the quotient rows used for neighborhoods with one
/// vertex-disjoint P_3: u_0 sees every u_i and every v_i, each v_i has one
/// private neighbor w_i, and the u_i are leaves.
/// Layout: u_0 = 0, u_i = i, v_i = a + i, w_i = a + b + i.
inline Graph g_ab(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("G(a,b) parameters must be nonnegative");
    detail::require_order(1LL + a + 2LL * b);
    Graph g(1 + a + 2 * b);
    for (int i = 1; i <= a; ++i) g.add_edge(0, i);
    for (int i = 1; i <= b; ++i) {
        g.add_edge(0, a + i);
        g.add_edge(a + i, a + b + i);
    }
    return g;
}

/// Index layout of G(a,b,c,d).
struct GabcdLayout {
    int a, b, c, d;
    static constexpr Vertex apex = 0;
    static constexpr Vertex center = 1;
    Vertex leaf(int i) const { return 1 + i; }            // u_i, 1 <= i <= a
    Vertex spine(int i) const { return 1 + a + i; }       // v_i, 1 <= i <= b
    Vertex tip(int i) const { return 1 + a + b + i; }     // w_i, 1 <= i <= b
    Vertex pair_x(int i) const { return 2 + a + 2 * b + 2 * (i - 1); }  // x_i, 1 <= i <= c
    Vertex pair_y(int i) const { return pair_x(i) + 1; }               // y_i
    Vertex lone(int i) const { return 1 + a + 2 * b + 2 * c + i; }      // z_i, 1 <= i <= d
    int degree_of_apex() const { return a + 2 * b + 1; }
    int order() const { return a + 2 * b + 2 * c + d + 2; }
    VertexSet first_neighborhood() const { return VertexSet::range(1, 2 + a + 2 * b); }
    VertexSet second_neighborhood() const { return VertexSet::range(2 + a + 2 * b, order()); }
};

/// G(a,b,c,d): apex u joined to G(a,b); second neighborhood cK_2 ∪ dK_1, each of
/// whose vertices is adjacent to all of N(u) except u_0.
inline Graph g_abcd(int a, int b, int c, int d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("G(a,b,c,d) parameters must be nonnegative");
    detail::require_order(2LL + a + 2LL * b + 2LL * c + d);
    const GabcdLayout lay{a, b, c, d};
    Graph g(lay.order());
    const Graph tree = g_ab(a, b);
    detail::copy_into(g, tree, 1);
    const auto first = lay.first_neighborhood();
    first.for_each([&](Vertex v) { g.add_edge(GabcdLayout::apex, v); });
    for (int i = 1; i <= c; ++i) g.add_edge(lay.pair_x(i), lay.pair_y(i));
    const auto reach = first - VertexSet::single(GabcdLayout::center);
    lay.second_neighborhood().for_each([&](Vertex z) {
        reach.for_each([&](Vertex v) { g.add_edge(z, v); });
    });
    return g;
}

// ---------------------------------------------------------------------------
// Queries

inline VertexSet neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }
inline int degree(const Graph& g, Vertex v) { return g.degree(v); }
inline int edge_count(const Graph& g) { return g.edge_count(); }

/// Vertices at distance exactly 2 from v.
inline VertexSet second_neighborhood(const Graph& g, Vertex v) {
    const auto first = g.neighbors(v);
    VertexSet reach;
    first.for_each([&](Vertex w) { reach = reach | g.neighbors(w); });
    return reach - first - VertexSet::single(v);
}

inline void require_subset(const Graph& g, VertexSet s) {
    if ((s - g.vertices()) != VertexSet{})
        throw std::out_of_range("vertex set is not contained in the graph");
}

/// Number of edges inside G[S].
inline int edges_within(const Graph& g, VertexSet s) {
    require_subset(g, s);
    int twice = 0;
    s.for_each([&](Vertex v) { twice += (g.neighbors(v) & s).size(); });
    return twice / 2;
}

/// e(S,T) for disjoint S and T.
inline int edges_between(const Graph& g, VertexSet s, VertexSet t) {
    require_subset(g, s);
    require_subset(g, t);
    if (!(s & t).empty()) throw std::invalid_argument("edges_between needs disjoint sets");
    int count = 0;
    s.for_each([&](Vertex v) { count += (g.neighbors(v) & t).size(); });
    return count;
}

/// G[S], relabeled so that the members of S keep their relative order.
inline Graph induced(const Graph& g, VertexSet s) {
    require_subset(g, s);
    if (s.empty()) throw std::invalid_argument("induced subgraph of an empty set");
    const auto members = s.to_vector();
    std::array<int, kMaxOrder> index{};
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<int>(i);
    Graph out(static_cast<int>(members.size()));
    for (auto u : members)
        (g.neighbors(u) & s).for_each([&](Vertex v) {
            if (u < v) out.add_edge(index[u], index[v]);
        });
    return out;
}

inline Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge to delete is not present");
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

/// Vertices reachable from `start` inside `within`.
inline VertexSet reachable(const Graph& g, Vertex start, VertexSet within) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](Vertex v) { next = next | (g.neighbors(v) & within); });
        frontier = next - seen;
        seen = seen | frontier;
    }
    return seen;
}

/// Connected components of G[S].
inline int component_count(const Graph& g, VertexSet s) {
    int count = 0;
    while (!s.empty()) {
        s = s - reachable(g, s.min(), s);
        ++count;
    }
    return count;
}

inline bool is_connected(const Graph& g) {
    return reachable(g, 0, g.vertices()) == g.vertices();
}

// ---------------------------------------------------------------------------
// graph6

class graph6_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Standard graph6: size header, then the upper triangle in column-major
/// order packed six bits per byte, each byte offset by 63.
inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw graph6_error("graph6: empty input");
    for (char ch : text)
        if (ch < 63 || ch > 126) throw graph6_error("graph6: byte outside 63..126");

    std::size_t pos = 0;
    int n = 0;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == '~') throw graph6_error("graph6: unsupported size header");
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
        pos = 4;
    }
    if (n < 1 || n > kMaxOrder) throw graph6_error("graph6: order " + std::to_string(n) + " outside 1..64");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos < expected) throw graph6_error("graph6: truncated body");
    if (text.size() - pos > expected) throw graph6_error("graph6: trailing data");

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (; k < expected * 6; ++k) {
        const int byte = text[pos + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) throw graph6_error("graph6: nonzero padding bits");
    }
    return g;
}

}  // namespace wheelfree
