#include <gtest/gtest.h>

#include "wheelfree/enumeration.hpp"
#include "wheelfree/partition.hpp"

using namespace wheelfree;

namespace {

Polynomial poly(std::initializer_list<Rational> descending) { return Polynomial::from_descending(descending); }

}  // namespace

TEST(Partition, Validation) {
    EXPECT_THROW(Partition(3, {VertexSet::range(0, 2)}), std::invalid_argument);
    EXPECT_THROW(Partition(3, {VertexSet::range(0, 2), VertexSet::range(1, 3)}), std::invalid_argument);
    EXPECT_THROW(Partition(3, {VertexSet::range(0, 3), VertexSet{}}), std::invalid_argument);
    EXPECT_TRUE(Partition(3, {VertexSet::single(0), VertexSet::single(1), VertexSet::single(2)}).discrete());
}

TEST(Partition, CoarsestEquitable) {
    EXPECT_EQ(coarsest_equitable(cycle(6)).size(), 1);
    EXPECT_EQ(coarsest_equitable(path(5)).size(), 3);
    EXPECT_EQ(coarsest_equitable(star(5)).size(), 2);
    const auto p = coarsest_equitable(h_n(10));
    ASSERT_EQ(p.size(), 3);
    EXPECT_EQ(p.cell(0), VertexSet::range(0, 4));
    EXPECT_EQ(p.cell(1), VertexSet::single(4));
    EXPECT_EQ(p.cell(2), VertexSet::range(5, 10));
    for (const Graph& g : {h_n(11), g_abcd(2, 1, 0, 3), graph_f(), path(7)}) {
        EXPECT_TRUE(is_equitable(g, coarsest_equitable(g), MatrixKind::adjacency));
        EXPECT_TRUE(is_equitable(g, coarsest_equitable(g), MatrixKind::signless_laplacian));
    }
    EXPECT_FALSE(is_equitable(path(3), Partition::unit(3), MatrixKind::adjacency));
    EXPECT_THROW(quotient_matrix(path(3), Partition::unit(3), MatrixKind::adjacency), std::invalid_argument);
}

TEST(Quotient, OddHn) {
    for (int n : {5, 9, 13}) {
        const Graph h = h_n(n);
        const auto q = quotient_matrix(h, coarsest_equitable(h), MatrixKind::adjacency);
        EXPECT_EQ(q, QuotientMatrix::from_rows({{1, Rational(n + 1, 2)}, {Rational(n - 1, 2), 0}})) << q.to_string();
    }
}

TEST(Quotient, TwoModFourHn) {
    for (int n : {6, 10, 14}) {
        const Graph h = h_n(n);
        const auto q = quotient_matrix(h, coarsest_equitable(h), MatrixKind::adjacency);
        EXPECT_EQ(q, QuotientMatrix::from_rows({{1, 0, n / 2}, {0, 0, n / 2}, {n / 2 - 1, 1, 0}}));
        EXPECT_EQ(char_poly(q), poly({1, -1, Rational(-n * n, 4), Rational(n, 2)}));
    }
    EXPECT_EQ(char_poly(quotient_matrix(h_n(6), coarsest_equitable(h_n(6)), MatrixKind::adjacency)),
              poly({1, -1, -9, 3}));
}

TEST(Quotient, SignlessLaplacianOfK2Join) {
    for (int n : {4, 8, 11}) {
        const Graph g = matching_join(1, 0, n - 2);
        const auto q = quotient_matrix(g, coarsest_equitable(g, MatrixKind::signless_laplacian),
                                       MatrixKind::signless_laplacian);
        EXPECT_EQ(q, QuotientMatrix::from_rows({{n, n - 2}, {2, 2}}));
    }
}

TEST(Polynomial, Basics) {
    const auto p = poly({1, 0, -2});
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p(Rational(3)), Rational(7));
    EXPECT_NEAR(p.evaluate(std::sqrt(2.0)), 0.0, 1e-12);
    EXPECT_EQ(p.to_string(), "x^2 - 2");
    EXPECT_EQ(poly({0, 0, 1}).degree(), 0);
    EXPECT_EQ(poly({1, -1, Rational(-9), 3}).to_string(), "x^3 - x^2 - 9x + 3");
}

TEST(Polynomial, GraphCharacteristicPolynomials) {
    EXPECT_EQ(char_poly(cycle(4), MatrixKind::adjacency), poly({1, 0, -4, 0, 0}));
    // (x - 4)(x + 1)^4
    EXPECT_EQ(char_poly(complete(5), MatrixKind::adjacency), poly({1, 0, -10, -20, -15, -4}));
    EXPECT_EQ(char_poly(path(3), MatrixKind::signless_laplacian), poly({1, -4, 3, 0}));
    // Cospectral but not isomorphic.
    EXPECT_EQ(char_poly(star(4), MatrixKind::adjacency),
              char_poly(disjoint_union(cycle(4), Graph(1)), MatrixKind::adjacency));
}

TEST(Quotient, SymmetrizedEigenvaluesMatchHost) {
    for (int n = 2; n <= 7; ++n) {
        GeneratorConfig config;
        config.n = n;
        config.filter = GraphFilter::all;
        for (const auto& g : enumerate_graphs(config)) {
            if (!is_connected(g)) continue;
            for (auto kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian})
                EXPECT_TRUE(verify_lemma1(g, coarsest_equitable(g, kind), kind)) << to_graph6(g);
        }
    }
    EXPECT_THROW(verify_lemma1(empty_graph(2), Partition::unit(2), MatrixKind::adjacency), std::invalid_argument);
}

TEST(Apex, PolynomialsMatchQuotients) {
    struct Case {
        int n, du, b;
        std::initializer_list<Rational> coeffs;
    };
    const std::vector<Case> cases{
        {13, 7, 2, {1, 0, -42, -32, 89, 24, -10}}, {13, 7, 1, {1, 0, -43, -22, 87, 18, -20}},
        {11, 8, 3, {1, 0, -27, -26, 49, 14, -2}},  {12, 7, 2, {1, 0, -36, -28, 73, 20, -8}},
        {14, 8, 3, {1, 0, -48, -44, 109, 32, -5}}, {11, 6, 2, {1, 0, -30, -26, 53, 18, -4}},
        {15, 9, 3, {1, 0, -55, -46, 139, 34, -10}}, {20, 10, 4, {1, 0, -97, -90, 285, 74, -9}},
    };
    for (const auto& c : cases) {
        const auto d = apex_char_poly_details(c.n, c.du, c.b);
        EXPECT_TRUE(d.matches) << c.n << "," << c.du << "," << c.b;
        EXPECT_EQ(d.computed, Polynomial::from_descending(c.coeffs)) << d.computed.to_string();
    }
    EXPECT_THROW(apex_char_poly_details(13, 7, 3), std::invalid_argument);
    EXPECT_THROW(apex_char_poly_details(8, 7, 2), std::invalid_argument);
    EXPECT_THROW(apex_char_poly_details(13, 7, 0), std::invalid_argument);
}

TEST(Apex, PartitionShape) {
    const GabcdLayout lay{2, 2, 0, 3};
    const auto p = apex_partition(lay);
    EXPECT_EQ(p.size(), 6);
    EXPECT_TRUE(is_equitable(g_abcd(2, 2, 0, 3), p, MatrixKind::adjacency));
    EXPECT_THROW(apex_partition({1, 1, 1, 1}), std::invalid_argument);
}

TEST(Apex, AllPathsQuotientBelowBound) {
    for (int n = 11; n <= 40; ++n)
        for (int du = 3; du <= n - 2; du += 2) {
            const auto r = all_paths_quotient_bound(n, du);
            EXPECT_TRUE(r.holds) << n << "," << du << ": " << r.lambda1 << " vs " << r.bound;
        }
}
