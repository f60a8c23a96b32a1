#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wheelfree/enumeration.hpp"
#include "wheelfree/wheel.hpp"

using namespace wheelfree;

TEST(Wheel, WheelsAreDetected) {
    for (int n = 4; n <= 12; ++n) {
        const Graph w = wheel(n);
        EXPECT_FALSE(is_wheel_free(w));
        const auto witness = find_wheel_witness(w);
        ASSERT_TRUE(witness.has_value());
        EXPECT_TRUE(validate_witness(w, *witness));
        EXPECT_EQ(witness->hub, 0);
        EXPECT_EQ(static_cast<int>(witness->rim.size()), n - 1);
        EXPECT_TRUE(is_wheel_free(delete_edge(w, 0, 1)));
    }
}

TEST(Wheel, WitnessRule) {
    // K_4 as W_4: lowest hub, lexicographically smallest triangle.
    auto w = find_wheel_witness(complete(4));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->hub, 0);
    EXPECT_EQ(w->rim, (std::vector<Vertex>{1, 2, 3}));

    // K_2 ∇ C_4: hub 0 sees vertex 1 and the 4-cycle, so the shortest rim is a triangle through 1.
    w = find_wheel_witness(join(complete(2), cycle(4)));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->hub, 0);
    EXPECT_EQ(w->rim, (std::vector<Vertex>{1, 2, 3}));

    // Hub 0 with a 5-cycle rim only.
    w = find_wheel_witness(wheel(6));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->rim, (std::vector<Vertex>{1, 2, 3, 4, 5}));
}

TEST(Wheel, ValidateWitnessRejectsNonsense) {
    const Graph w = wheel(5);
    EXPECT_TRUE(validate_witness(w, {0, {1, 2, 3, 4}}));
    EXPECT_FALSE(validate_witness(w, {0, {1, 3, 2, 4}}));
    EXPECT_FALSE(validate_witness(w, {1, {0, 2, 4}}));
    EXPECT_FALSE(validate_witness(w, {0, {1, 2}}));
}

TEST(Wheel, FamiliesAreWheelFree) {
    for (int n = 4; n <= 40; ++n) EXPECT_TRUE(is_wheel_free(h_n(n))) << n;
    EXPECT_TRUE(is_wheel_free(graph_f()));
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b) EXPECT_TRUE(is_wheel_free(matching_join(a, b, 6)));
    EXPECT_TRUE(is_wheel_free(empty_graph(5)));
    EXPECT_TRUE(is_wheel_free(cycle(9)));
    EXPECT_FALSE(is_wheel_free(complete(4)));
}

TEST(Wheel, AgreesWithCycleOracleOnRandomGraphs) {
    std::mt19937_64 rng(7);
    int with = 0;
    for (int rep = 0; rep < 600; ++rep) {
        const int n = 4 + rep % 7;
        const Graph g = oracle::random_graph(rng, n, 0.2 + 0.05 * (rep % 6));
        const bool free = is_wheel_free(g);
        EXPECT_EQ(free, !brute_force_contains_wheel(g)) << to_graph6(g);
        const auto w = find_wheel_witness(g);
        EXPECT_EQ(free, !w.has_value());
        if (w) {
            ++with;
            EXPECT_TRUE(validate_witness(g, *w));
        }
    }
    EXPECT_GT(with, 50);
}

TEST(Wheel, CommonNeighborhoodChecksHoldOnWheelFreeGraphs) {
    for (int n = 3; n <= 7; ++n)
        for (const auto& g : enumerate_wheel_free(n)) EXPECT_TRUE(check_fact2(g).empty()) << to_graph6(g);
    const auto v = check_fact2(wheel(5));
    EXPECT_FALSE(v.empty());
    // Vertices 1 and 3 share 0, 2 and 4, which induce the path 2-0-4.
    EXPECT_EQ(v.front(), (Fact2Violation{1, 3, Fact2Kind::p3_in_common_neighborhood}));
}
