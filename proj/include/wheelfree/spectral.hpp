#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace wheelfree {

/// Dense real symmetric matrix, row-major.
class SymMatrix {
public:
    explicit SymMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {
        if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
    }

    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        SymMatrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.dim_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.dim_) throw std::invalid_argument("matrix is not square");
            for (int j = 0; j < m.dim_; ++j) m.a_[m.index(i, j)] = rows[i][j];
        }
        m.validate();
        return m;
    }

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return a_[index(i, j)]; }

    // Writes both (i, j) and (j, i).
    void set(int i, int j, double value) {
        a_[index(i, j)] = value;
        a_[index(j, i)] = value;
    }

    void validate() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                if (!std::isfinite(a_[index(i, j)])) throw std::invalid_argument("matrix entry is not finite");
                if (a_[index(i, j)] != a_[index(j, i)]) throw std::invalid_argument("matrix is not symmetric");
            }
    }

    bool nonnegative() const {
        return std::all_of(a_.begin(), a_.end(), [](double x) { return x >= 0.0; });
    }

    std::vector<double> multiply(const std::vector<double>& x) const {
        std::vector<double> y(dim_, 0.0);
        for (int i = 0; i < dim_; ++i) {
            double s = 0.0;
            for (int j = 0; j < dim_; ++j) s += a_[index(i, j)] * x[j];
            y[i] = s;
        }
        return y;
    }

    double row_sum(int i) const {
        double s = 0.0;
        for (int j = 0; j < dim_; ++j) s += a_[index(i, j)];
        return s;
    }

    bool operator==(const SymMatrix&) const = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }

    int dim_;
    std::vector<double> a_;
};

inline SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix m(g.order());
    for (int u = 0; u < g.order(); ++u)
        g.neighbors(u).for_each([&](Vertex v) { m.set(u, v, 1.0); });
    return m;
}

/// Q = D + A.
inline SymMatrix signless_laplacian(const Graph& g) {
    SymMatrix m = adjacency_matrix(g);
    for (int v = 0; v < g.order(); ++v) m.set(v, v, g.degree(v));
    return m;
}

enum class MatrixKind { adjacency, signless_laplacian };

inline SymMatrix graph_matrix(const Graph& g, MatrixKind kind) {
    return kind == MatrixKind::adjacency ? adjacency_matrix(g) : signless_laplacian(g);
}

inline const char* to_string(MatrixKind kind) {
    return kind == MatrixKind::adjacency ? "adjacency" : "signless_laplacian";
}

enum class EigenMethod { jacobi, power };

inline const char* to_string(EigenMethod m) { return m == EigenMethod::jacobi ? "jacobi" : "power"; }

struct SpectralResult {
    double radius = 0.0;
    std::vector<double> perron;  // unit Euclidean norm
    double residual = 0.0;       // ||M x - radius x||_inf
    EigenMethod method = EigenMethod::jacobi;
    int iterations = 0;

    bool operator==(const SpectralResult&) const = default;
};

class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EigenDecomposition {
    std::vector<double> values;                // descending
    std::vector<std::vector<double>> vectors;  // vectors[k] belongs to values[k]
    int sweeps = 0;
};

/// Full diagonalisation by cyclic Jacobi rotations.
inline EigenDecomposition jacobi_eigen(const SymMatrix& m) {
    const int n = m.dim();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        V(i, i) = 1.0;
        for (int j = 0; j < n; ++j) A(i, j) = m(i, j);
    }

    const int max_sweeps = 10 * n * n;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        double diag = 0.0;
        for (int i = 0; i < n; ++i) {
            diag += A(i, i) * A(i, i);
            for (int j = i + 1; j < n; ++j) off += A(i, j) * A(i, j);
        }
        if (off == 0.0 || off <= 1e-32 * (diag + 2 * off)) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                if (std::abs(apq) <= 1e-17 * (std::abs(A(p, p)) + std::abs(A(q, q)))) {
                    A(p, q) = 0.0;
                    A(q, p) = 0.0;
                    continue;
                }
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = A(k, p);
                    const double akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = A(p, k);
                    const double aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double vkp = V(k, p);
                    const double vkq = V(k, q);
                    V(k, p) = c * vkp - s * vkq;
                    V(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == max_sweeps) throw convergence_error("Jacobi iteration did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return A(x, x) > A(y, y); });
    EigenDecomposition out;
    out.sweeps = sweep;
    for (int k : order) {
        out.values.push_back(A(k, k));
        std::vector<double> col(n);
        for (int i = 0; i < n; ++i) col[i] = V(i, k);
        out.vectors.push_back(std::move(col));
    }
    return out;
}

namespace detail {

inline double residual_inf(const SymMatrix& m, double lambda, const std::vector<double>& x) {
    const auto y = m.multiply(x);
    double r = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(y[i] - lambda * x[i]));
    return r;
}

inline void normalise(std::vector<double>& x) {
    double norm = 0.0;
    for (double e : x) norm += e * e;
    norm = std::sqrt(norm);
    for (double& e : x) e /= norm;
}

/// Nonnegative orientation for nonnegative matrices (|x| is again a top
/// eigenvector there); otherwise first nonzero entry positive.
inline void orient(std::vector<double>& x, bool nonnegative_matrix) {
    if (nonnegative_matrix) {
        for (double& e : x) e = std::abs(e);
    } else {
        for (double e : x) {
            if (e == 0.0) continue;
            if (e < 0.0)
                for (double& f : x) f = -f;
            break;
        }
    }
    normalise(x);
}

}  // namespace detail

/// Power iteration on M + sI with s the largest absolute row sum, so the
/// shifted spectrum is nonnegative and its top is the top of M.
inline SpectralResult power_iteration(const SymMatrix& m, double tol = 1e-12, int max_steps = 100000) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const int n = m.dim();
    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += std::abs(m(i, j));
        shift = std::max(shift, s);
    }
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = 1.0 + 0.01 * static_cast<double>(i % 7) / 7.0;
    detail::normalise(x);

    for (int step = 1; step <= max_steps; ++step) {
        auto y = m.multiply(x);
        double lambda = 0.0;
        for (int i = 0; i < n; ++i) lambda += x[i] * y[i];
        double r = 0.0;
        for (int i = 0; i < n; ++i) r = std::max(r, std::abs(y[i] - lambda * x[i]));
        if (r <= tol) {
            SpectralResult out{lambda, x, 0.0, EigenMethod::power, step};
            detail::orient(out.perron, m.nonnegative());
            out.residual = detail::residual_inf(m, out.radius, out.perron);
            return out;
        }
        for (int i = 0; i < n; ++i) y[i] += shift * x[i];
        detail::normalise(y);
        x = std::move(y);
    }
    throw convergence_error("power iteration did not reach tolerance within the step cap");
}

/// Largest eigenvalue with its Perron vector.
inline SpectralResult spectral_radius(const SymMatrix& m, double tol = 1e-12,
                                      EigenMethod method = EigenMethod::jacobi) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    if (method == EigenMethod::power) return power_iteration(m, tol);
    const auto eig = jacobi_eigen(m);
    SpectralResult out{eig.values.front(), eig.vectors.front(), 0.0, EigenMethod::jacobi, eig.sweeps};
    detail::orient(out.perron, m.nonnegative());
    out.residual = detail::residual_inf(m, out.radius, out.perron);
    if (out.residual > tol) {
        // One Rayleigh-quotient refinement after the abs() orientation.
        out.radius = 0.0;
        const auto y = m.multiply(out.perron);
        for (int i = 0; i < m.dim(); ++i) out.radius += out.perron[i] * y[i];
        out.residual = detail::residual_inf(m, out.radius, out.perron);
    }
    return out;
}

inline double rho_a(const Graph& g) { return spectral_radius(adjacency_matrix(g)).radius; }
inline double rho_q(const Graph& g) { return spectral_radius(signless_laplacian(g)).radius; }

// ---------------------------------------------------------------------------
// Closed forms

/// Largest root of x^3 - x^2 - (n^2/4) x + n/2 for n ≡ 2 (mod 4): 200 bisection
/// steps on [(sqrt(n^2-3)+1)/2, n/2+1], then 5 Newton steps.
inline double hn_cubic_root(int n) {
    const double nn = n;
    const auto f = [&](double x) { return ((x - 1.0) * x - nn * nn / 4.0) * x + nn / 2.0; };
    const auto df = [&](double x) { return (3.0 * x - 2.0) * x - nn * nn / 4.0; };
    double lo = (std::sqrt(nn * nn - 3.0) + 1.0) / 2.0;
    double hi = nn / 2.0 + 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 5; ++i) {
        const double d = df(x);
        if (d == 0.0) break;
        x -= f(x) / d;
    }
    return x;
}

/// rho_A(H_n).
inline double closed_form_rho_a_hn(int n) {
    if (n < 4) throw std::invalid_argument("H_n requires n >= 4");
    if (n % 2 == 1) return (n + 1) / 2.0;
    if (n % 4 == 0) return (std::sqrt(static_cast<double>(n) * n + 1.0) + 1.0) / 2.0;
    return hn_cubic_root(n);
}

/// rho_Q(K_2 ∇ (n-2)K_1).
inline double closed_form_rho_q(int n) {
    if (n < 3) throw std::invalid_argument("closed form for rho_Q needs n >= 3");
    const double s = n + 2.0;
    return (s + std::sqrt(s * s - 16.0)) / 2.0;
}

/// Symbolic rendering of the closed forms.
inline std::string closed_form_rho_a_text(int n) {
    if (n < 4) throw std::invalid_argument("H_n requires n >= 4");
    if (n % 2 == 1) return std::to_string((n + 1) / 2);
    if (n % 4 == 0) return "(1+sqrt(" + std::to_string(n * n + 1) + "))/2";
    return "largest root of x^3 - x^2 - " + std::to_string(n * n / 4) + "x + " + std::to_string(n / 2);
}

inline std::string closed_form_rho_q_text(int n) {
    if (n < 3) throw std::invalid_argument("closed form for rho_Q needs n >= 3");
    return "(" + std::to_string(n + 2) + "+sqrt(" + std::to_string((n + 2) * (n + 2) - 16) + "))/2";
}

// ---------------------------------------------------------------------------
// Walk counts and row sums

/// R_v = d_v + 2 e(G[N(v)]) + e(N(v), N_2(v)): the number of length-2 walks from v.
inline std::int64_t walk_count_r(const Graph& g, Vertex v) {
    const auto first = g.neighbors(v);
    const auto second = second_neighborhood(g, v);
    return static_cast<std::int64_t>(first.size()) + 2LL * edges_within(g, first) +
           edges_between(g, first, second);
}

struct RowSumBounds {
    double min;
    double max;
};

inline RowSumBounds row_sum_bounds(const SymMatrix& m) {
    RowSumBounds b{m.row_sum(0), m.row_sum(0)};
    for (int i = 1; i < m.dim(); ++i) {
        const double r = m.row_sum(i);
        b.min = std::min(b.min, r);
        b.max = std::max(b.max, r);
    }
    return b;
}

}  // namespace wheelfree
