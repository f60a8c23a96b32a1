#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graph.hpp"
#include "spectral.hpp"

namespace wheelfree {

using Rational = boost::multiprecision::cpp_rational;

/// Ordered list of disjoint nonempty cells covering {0..n-1}.
class Partition {
public:
    Partition(int n, std::vector<VertexSet> cells) : n_(n), cells_(std::move(cells)) {
        VertexSet seen;
        for (const auto& c : cells_) {
            if (c.empty()) throw std::invalid_argument("partition cell is empty");
            if (!(c & seen).empty()) throw std::invalid_argument("partition cells overlap");
            seen = seen | c;
        }
        if (seen != VertexSet::range(0, n)) throw std::invalid_argument("partition does not cover the vertex set");
    }

    static Partition unit(int n) { return Partition(n, {VertexSet::range(0, n)}); }

    int order() const { return n_; }
    int size() const { return static_cast<int>(cells_.size()); }
    const std::vector<VertexSet>& cells() const { return cells_; }
    const VertexSet& cell(int i) const { return cells_[i]; }
    bool discrete() const { return size() == n_; }

    /// Same cells, ordered by smallest member.
    Partition sorted_by_min() const {
        auto cells = cells_;
        std::sort(cells.begin(), cells.end(), [](VertexSet x, VertexSet y) { return x.min() < y.min(); });
        return Partition(n_, std::move(cells));
    }

    bool operator==(const Partition&) const = default;

private:
    int n_;
    std::vector<VertexSet> cells_;
};

namespace detail {

inline void require_partition_of(const Graph& g, const Partition& p) {
    if (p.order() != g.order()) throw std::invalid_argument("partition order does not match graph order");
}

/// Row sum of block (cell_i, cell_j) at vertex v of the chosen matrix.
inline int block_row_sum(const Graph& g, Vertex v, VertexSet target, bool same_cell, MatrixKind kind) {
    int s = std::popcount(g.row(v) & target.bits());
    if (kind == MatrixKind::signless_laplacian && same_cell) s += g.degree(v);
    return s;
}

}  // namespace detail

/// Equitable refinement of an ordered partition. Splits depend only on cell
/// positions and neighbor counts, so the result commutes with relabeling.
/// Sub-cells replace their parent in increasing order of neighbor count.
inline std::vector<VertexSet> refine_equitable(const Graph& g, std::vector<VertexSet> cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t j = 0; j < cells.size() && !changed; ++j) {
            const auto splitter = cells[j].bits();
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i].size() == 1) continue;
                std::map<int, VertexSet> groups;
                cells[i].for_each([&](Vertex v) { groups[std::popcount(g.row(v) & splitter)].insert(v); });
                if (groups.size() == 1) continue;
                std::vector<VertexSet> pieces;
                for (const auto& [count, members] : groups) pieces.push_back(members);
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
    return cells;
}

/// True iff every block of the chosen matrix has constant row sums.
inline bool is_equitable(const Graph& g, const Partition& p, MatrixKind kind) {
    detail::require_partition_of(g, p);
    for (int i = 0; i < p.size(); ++i) {
        for (int j = 0; j < p.size(); ++j) {
            const auto& ci = p.cell(i);
            const int first = detail::block_row_sum(g, ci.min(), p.cell(j), i == j, kind);
            bool same = true;
            ci.for_each([&](Vertex v) {
                if (detail::block_row_sum(g, v, p.cell(j), i == j, kind) != first) same = false;
            });
            if (!same) return false;
        }
    }
    return true;
}

/// Coarsest equitable partition reached by refining the unit partition, cells
/// sorted by smallest vertex. A and Q = D + A have the same equitable partitions.
inline Partition coarsest_equitable(const Graph& g, MatrixKind kind = MatrixKind::adjacency) {
    (void)kind;
    return Partition(g.order(), refine_equitable(g, {g.vertices()})).sorted_by_min();
}

// ---------------------------------------------------------------------------
// Quotient matrices

class QuotientMatrix {
public:
    explicit QuotientMatrix(int k) : k_(k), b_(static_cast<std::size_t>(k) * k) {
        if (k < 1) throw std::invalid_argument("quotient matrix needs at least one cell");
    }

    static QuotientMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
        QuotientMatrix q(static_cast<int>(rows.size()));
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != q.k_) throw std::invalid_argument("quotient matrix is not square");
            int j = 0;
            for (const auto& x : row) q.at(i, j++) = x;
            ++i;
        }
        return q;
    }

    int size() const { return k_; }
    const Rational& at(int i, int j) const { return b_[static_cast<std::size_t>(i) * k_ + j]; }
    Rational& at(int i, int j) { return b_[static_cast<std::size_t>(i) * k_ + j]; }

    bool operator==(const QuotientMatrix&) const = default;

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < k_; ++i) {
            s += i ? ", [" : "[";
            for (int j = 0; j < k_; ++j) s += (j ? ", " : "") + at(i, j).str();
            s += "]";
        }
        return s + "]";
    }

private:
    int k_;
    std::vector<Rational> b_;
};

/// b[i][j] = constant row sum of block (i, j). Rejects non-equitable partitions.
inline QuotientMatrix quotient_matrix(const Graph& g, const Partition& p, MatrixKind kind) {
    if (!is_equitable(g, p, kind)) throw std::invalid_argument("partition is not equitable");
    QuotientMatrix q(p.size());
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            q.at(i, j) = detail::block_row_sum(g, p.cell(i).min(), p.cell(j), i == j, kind);
    return q;
}

// ---------------------------------------------------------------------------
// Polynomials with exact rational coefficients

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial from_descending(std::initializer_list<Rational> coeffs) {
        std::vector<Rational> c(coeffs.begin(), coeffs.end());
        std::reverse(c.begin(), c.end());
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(int power) const { return power < static_cast<int>(c_.size()) ? c_[power] : Rational(0); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double evaluate(double x) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
        return acc;
    }

    bool operator==(const Polynomial&) const = default;

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (int p = degree(); p >= 0; --p) {
            const Rational& a = c_[p];
            if (a == 0) continue;
            const bool negative = a < 0;
            const Rational mag = negative ? Rational(-a) : a;
            if (s.empty()) {
                if (negative) s += "-";
            } else {
                s += negative ? " - " : " + ";
            }
            if (mag != 1 || p == 0) s += mag.str();
            if (p >= 1) s += "x";
            if (p >= 2) s += "^" + std::to_string(p);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Characteristic polynomial det(xI - A) of a k x k rational matrix (row-major)
/// by the Faddeev-LeVerrier recurrence.
inline Polynomial char_poly(const std::vector<Rational>& a, int k) {
    if (static_cast<int>(a.size()) != k * k) throw std::invalid_argument("matrix data does not match dimension");
    auto at = [k](std::vector<Rational>& m, int i, int j) -> Rational& { return m[static_cast<std::size_t>(i) * k + j]; };
    std::vector<Rational> coeff(k + 1);
    coeff[k] = 1;
    std::vector<Rational> m(static_cast<std::size_t>(k) * k);   // M_0 = 0
    std::vector<Rational> am(static_cast<std::size_t>(k) * k);
    for (int step = 1; step <= k; ++step) {
        // M_step = A M_{step-1} + c_{k-step+1} I
        for (int i = 0; i < k; ++i) at(m, i, i) += coeff[k - step + 1];
        Rational trace = 0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                Rational s = 0;
                for (int l = 0; l < k; ++l) s += a[static_cast<std::size_t>(i) * k + l] * at(m, l, j);
                at(am, i, j) = s;
                if (i == j) trace += s;
            }
        coeff[k - step] = -trace / step;
        m.swap(am);
    }
    return Polynomial(std::move(coeff));
}

inline Polynomial char_poly(const QuotientMatrix& q) {
    std::vector<Rational> a;
    a.reserve(static_cast<std::size_t>(q.size()) * q.size());
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j) a.push_back(q.at(i, j));
    return char_poly(a, q.size());
}

/// Exact characteristic polynomial of the full A(G) or Q(G).
inline Polynomial char_poly(const Graph& g, MatrixKind kind) {
    const int n = g.order();
    std::vector<Rational> a(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u) {
        g.neighbors(u).for_each([&](Vertex v) { a[static_cast<std::size_t>(u) * n + v] = 1; });
        if (kind == MatrixKind::signless_laplacian) a[static_cast<std::size_t>(u) * n + u] = g.degree(u);
    }
    return char_poly(a, n);
}

// ---------------------------------------------------------------------------
// Quotient spectra

/// D^{1/2} B D^{-1/2} with D the diagonal of cell sizes. Requires
/// |X_i| b_ij = |X_j| b_ji, which holds for quotients of symmetric matrices.
inline SymMatrix symmetrized_quotient(const QuotientMatrix& q, const std::vector<int>& cell_sizes) {
    const int k = q.size();
    if (static_cast<int>(cell_sizes.size()) != k) throw std::invalid_argument("cell sizes do not match quotient");
    SymMatrix s(k);
    for (int i = 0; i < k; ++i) {
        s.set(i, i, static_cast<double>(q.at(i, i)));
        for (int j = i + 1; j < k; ++j) {
            if (q.at(i, j) * cell_sizes[i] != q.at(j, i) * cell_sizes[j])
                throw std::invalid_argument("quotient is not balanced by the cell sizes");
            s.set(i, j, std::sqrt(static_cast<double>(q.at(i, j) * q.at(j, i))));
        }
    }
    return s;
}

inline std::vector<int> cell_sizes(const Partition& p) {
    std::vector<int> out;
    for (const auto& c : p.cells()) out.push_back(c.size());
    return out;
}

/// Eigenvalues of the quotient, descending.
inline std::vector<double> quotient_eigenvalues(const QuotientMatrix& q, const Partition& p) {
    return jacobi_eigen(symmetrized_quotient(q, cell_sizes(p))).values;
}

/// lambda_1(B) equals rho(M) for connected graphs.
inline bool verify_lemma1(const Graph& g, const Partition& p, MatrixKind kind, double tol = 1e-9) {
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    const auto q = quotient_matrix(g, p, kind);
    const double lambda1 = quotient_eigenvalues(q, p).front();
    const double rho = spectral_radius(graph_matrix(g, kind)).radius;
    return std::abs(lambda1 - rho) <= tol;
}

// ---------------------------------------------------------------------------
// The six-cell partitions of G(a,b,0,d)

/// Cells {u}, {u_0}, {u_1..u_a}, {v_1..v_b}, {w_1..w_b}, {z_1..z_d}; empty
/// groups are skipped. Only defined for c = 0.
inline Partition apex_partition(const GabcdLayout& lay) {
    if (lay.c != 0) throw std::invalid_argument("apex partition is defined for c = 0");
    std::vector<VertexSet> cells{VertexSet::single(GabcdLayout::apex), VertexSet::single(GabcdLayout::center)};
    auto push = [&](int count, auto vertex_of) {
        VertexSet s;
        for (int i = 1; i <= count; ++i) s.insert(vertex_of(i));
        if (!s.empty()) cells.push_back(s);
    };
    push(lay.a, [&](int i) { return lay.leaf(i); });
    push(lay.b, [&](int i) { return lay.spine(i); });
    push(lay.b, [&](int i) { return lay.tip(i); });
    push(lay.d, [&](int i) { return lay.lone(i); });
    return Partition(lay.order(), std::move(cells));
}

/// phi(B, x, d_u) for G(d_u-3, 1, 0, n-1-d_u).
inline Polynomial apex_polynomial_single_path(int n, int du) {
    const Rational N = n, D = du;
    return Polynomial::from_descending({
        1,
        0,
        D * D - (N + 2) * D + N,
        4 - 2 * N,
        -(3 * D * D - (3 * N + 6) * D + 6 * N + 3),
        2 * N - 8,
        D * D - (N + 2) * D + 3 * N - 3,
    });
}

/// phi(B, x, d_u, b) for G(d_u-2b-1, b, 0, n-1-d_u).
inline Polynomial apex_polynomial(int n, int du, int b) {
    const Rational N = n, D = du, B = b;
    return Polynomial::from_descending({
        1,
        0,
        D * D - (N + 2) * D + N + B - 1,
        (2 * B - 2) * D + 2 * B + 2 - 2 * B * N,
        -((B + 2) * D * D - (B * B + (B + 2) * N + 3 * B + 2) * D + (B + 1) * (B + 2) * N + 4 * B - 1),
        (2 - 2 * B) * D + (2 * N - 6) * B - 2,
        D * D - (N + 2 * B) * D + (2 * B + 1) * (N - 1),
    });
}

struct ApexPolynomialCheck {
    Polynomial computed;
    Polynomial expected;
    bool matches;
};

/// Builds G(d_u-2b-1, b, 0, n-1-d_u), takes the six-cell quotient and compares
/// its exact characteristic polynomial with the closed polynomial in (n, d_u, b).
/// b = 1 is compared with the single-path polynomial.
inline ApexPolynomialCheck apex_char_poly_details(int n, int du, int b) {
    if (b < 1) throw std::invalid_argument("b must be at least 1");
    const int a = du - 2 * b - 1;
    const int d = n - 1 - du;
    if (a < 1) throw std::invalid_argument("parameters leave the u_i cell empty (need b <= (d_u-2)/2)");
    if (d < 1) throw std::invalid_argument("parameters leave the z cell empty (need d_u <= n-2)");
    const GabcdLayout lay{a, b, 0, d};
    const Graph g = g_abcd(a, b, 0, d);
    const auto q = quotient_matrix(g, apex_partition(lay), MatrixKind::adjacency);
    auto computed = char_poly(q);
    auto expected = b == 1 ? apex_polynomial_single_path(n, du) : apex_polynomial(n, du, b);
    const bool ok = computed == expected;
    return {std::move(computed), std::move(expected), ok};
}

inline bool subcase_char_poly_check(int n, int du, int b) { return apex_char_poly_details(n, du, b).matches; }

struct QuotientBound {
    double lambda1;
    double bound;
    bool holds;
};

/// G(0, (d_u-1)/2, 0, n-1-d_u) has no polynomial on record; compare lambda_1 of
/// its five-cell quotient with (2n+1)/4 instead.
inline QuotientBound all_paths_quotient_bound(int n, int du) {
    if (du < 3 || du % 2 == 0) throw std::invalid_argument("d_u must be odd and at least 3");
    if (n - 1 - du < 1) throw std::invalid_argument("parameters leave the z cell empty");
    const GabcdLayout lay{0, (du - 1) / 2, 0, n - 1 - du};
    const Graph g = g_abcd(lay.a, lay.b, 0, lay.d);
    const auto p = apex_partition(lay);
    const auto q = quotient_matrix(g, p, MatrixKind::adjacency);
    const double lambda1 = quotient_eigenvalues(q, p).front();
    const double bound = (2.0 * n + 1.0) / 4.0;
    return {lambda1, bound, lambda1 < bound};
}

}  // namespace wheelfree
