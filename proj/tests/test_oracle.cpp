#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "checks.hpp"
#include "localcross/errors.hpp"
#include "localcross/generators.hpp"
#include "localcross/oracle.hpp"

using namespace localcross;
using namespace lctest;

namespace {

// Plain permutation enumeration, independent of the oracles' pruning.
std::optional<std::vector<Vertex>> naive_one_sided(const BipartiteInstance& inst, Weight k,
                                                   WeightMode mode) {
    auto ys = inst.y_side();
    do {
        if (is_two_layer_k_planar(inst, TwoLayerDrawing{*inst.fixed_x_order(), ys}, k, mode)) return ys;
    } while (std::next_permutation(ys.begin(), ys.end()));
    return std::nullopt;
}

bool naive_two_sided(const BipartiteInstance& inst, int k) {
    auto xs = inst.x_side();
    do {
        auto ys = inst.y_side();
        do {
            if (is_two_layer_k_planar(inst, TwoLayerDrawing{xs, ys}, k)) return true;
        } while (std::next_permutation(ys.begin(), ys.end()));
    } while (std::next_permutation(xs.begin(), xs.end()));
    return false;
}

std::optional<std::vector<Vertex>> naive_outer(const Graph& g, int k) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
    std::optional<std::vector<Vertex>> best;
    do {
        CircularDrawing d{order};
        if (!is_outer_k_planar(g, d, k)) continue;
        auto c = d.canonical().cycle;
        if (!best || c < *best) best = c;
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

std::pair<int, std::vector<Vertex>> naive_bandwidth(const Graph& g) {
    std::vector<Vertex> order(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
    int best = INT32_MAX;
    std::vector<Vertex> arg;
    do {
        int b = layout_bandwidth(g, LinearLayout{order});
        if (b < best) {
            best = b;
            arg = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return {best, arg};
}

}  // namespace

TEST(Oracle, OneSidedMatchesNaiveEnumeration) {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 300; ++it) {
        int nx = 1 + static_cast<int>(draw_below(rng, 4));
        int ny = 1 + static_cast<int>(draw_below(rng, 6));
        auto inst = random_bipartite(nx, ny, 0.5, rng);
        inst = with_random_order(inst, rng);
        int k = static_cast<int>(draw_below(rng, 3));
        auto got = oracle_one_sided(inst, k);
        auto want = naive_one_sided(inst, k, WeightMode::Count);
        ASSERT_EQ(got.has_value(), want.has_value());
        if (got) EXPECT_EQ(got->y_order, *want);
    }
}

TEST(Oracle, WeightedOneSidedMatchesNaive) {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        auto base = random_bipartite(3, 5, 0.5, rng);
        Graph g(base.graph().vertex_count());
        for (const auto& e : base.graph().edges())
            g.add_edge(e.u, e.v, 1 + static_cast<Weight>(draw_below(rng, 3)));
        BipartiteInstance inst(g, base.x_side(), base.x_side());
        Weight k = static_cast<Weight>(draw_below(rng, 6));
        for (auto mode : {WeightMode::Sum, WeightMode::Product}) {
            auto got = oracle_one_sided(inst, k, mode);
            auto want = naive_one_sided(inst, k, mode);
            ASSERT_EQ(got.has_value(), want.has_value());
            if (got) EXPECT_EQ(got->y_order, *want);
        }
    }
}

TEST(Oracle, TwoSidedMatchesNaive) {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 150; ++it) {
        int nx = 1 + static_cast<int>(draw_below(rng, 4));
        int ny = 1 + static_cast<int>(draw_below(rng, 4));
        auto inst = random_bipartite(nx, ny, 0.6, rng);
        int k = static_cast<int>(draw_below(rng, 3));
        auto got = oracle_two_sided(inst, k);
        ASSERT_EQ(got.has_value(), naive_two_sided(inst, k));
        if (got) EXPECT_TRUE(is_two_layer_k_planar(inst, *got, k));
    }
}

TEST(Oracle, OuterMatchesNaive) {
    std::mt19937_64 rng(15);
    for (int it = 0; it < 120; ++it) {
        int n = 1 + static_cast<int>(draw_below(rng, 7));
        auto g = random_connected(n, static_cast<int>(draw_below(rng, 8)), rng);
        int k = static_cast<int>(draw_below(rng, 3));
        auto got = oracle_outer(g, k);
        auto want = naive_outer(g, k);
        ASSERT_EQ(got.has_value(), want.has_value());
        if (got) EXPECT_EQ(got->cycle, *want);
    }
}

TEST(Oracle, BandwidthMatchesNaive) {
    std::mt19937_64 rng(16);
    for (int it = 0; it < 80; ++it) {
        int n = 1 + static_cast<int>(draw_below(rng, 7));
        auto g = random_connected(n, static_cast<int>(draw_below(rng, 5)), rng);
        auto got = oracle_bandwidth(g);
        auto [b, layout] = naive_bandwidth(g);
        ASSERT_EQ(got.bandwidth, b);
        EXPECT_EQ(got.layout.order, layout);
    }
}

TEST(Oracle, NamedValues) {
    EXPECT_EQ(oracle_local_outer_crossing_number(complete_graph(5), 5), 2);
    EXPECT_EQ(oracle_local_outer_crossing_number(complete_graph(4), 5), 1);
    EXPECT_EQ(oracle_local_outer_crossing_number(cycle_graph(8), 5), 0);
    Graph star(5);
    for (int i = 1; i < 5; ++i) star.add_edge(0, i);
    EXPECT_EQ(oracle_bandwidth(star).bandwidth, 2);

    // K_{3,3}: the smallest two-sided budget agrees with plain enumeration.
    auto k33 = complete_bipartite(3, 3);
    int threshold = 0;
    while (!oracle_two_sided(k33, threshold)) ++threshold;
    EXPECT_EQ(threshold, 4);
    EXPECT_TRUE(naive_two_sided(k33, 4));
    EXPECT_FALSE(naive_two_sided(k33, 3));
}

TEST(Oracle, DeterministicAndCapped) {
    auto g = complete_graph(6);
    auto a = oracle_outer(g, 4), b = oracle_outer(g, 4);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->cycle, b->cycle);
    EXPECT_FALSE(oracle_outer(g, 3));
    OracleLimits tight;
    tight.max_outer_n = 5;
    EXPECT_THROW(oracle_outer(g, 3, tight), ResourceError);
    tight.max_y = 2;
    EXPECT_THROW(oracle_one_sided(complete_bipartite(2, 3).with_x_order({0, 1}), 1, WeightMode::Count, tight), ResourceError);
    tight.max_bandwidth_n = 4;
    EXPECT_THROW(oracle_bandwidth(path_graph(5), tight), ResourceError);
    tight.max_two_sided_orders = 10;
    EXPECT_THROW(oracle_two_sided(complete_bipartite(3, 3), 1, tight), ResourceError);
}
