#include <gtest/gtest.h>

#include <random>

#include "catalog.hpp"
#include "checks.hpp"
#include "localcross/crossings.hpp"
#include "localcross/errors.hpp"
#include "localcross/generators.hpp"
#include "localcross/oracle.hpp"
#include "localcross/outer.hpp"

using namespace localcross;
using namespace lctest;

namespace {

Graph k23() {
    Graph g(5);
    for (Vertex a : {0, 1})
        for (Vertex b : {2, 3, 4}) g.add_edge(a, b);
    return g;
}

std::vector<VertexSet> brute_candidates(const Graph& g, Vertex u, Vertex v, int k) {
    std::vector<Vertex> rest;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (x != u && x != v) rest.push_back(x);
    std::vector<VertexSet> out;
    for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
        VertexSet r(g.vertex_count());
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (mask >> i & 1u) r.insert(rest[i]);
        if (static_cast<int>(cut_edges(g, u, v, r).size()) <= k) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Outer, SmallNamedGraphs) {
    auto k4 = complete_graph(4);
    EXPECT_FALSE(solve_outer(k4, 0));
    auto d = solve_outer(k4, 1);
    ASSERT_TRUE(d);
    EXPECT_EQ(max_circular_crossing(k4, *d), 1);

    auto k5 = complete_graph(5);
    EXPECT_EQ(oracle_local_outer_crossing_number(k5, 4), 2);
    EXPECT_EQ(local_outer_crossing_number(k5, 4), 2);

    EXPECT_FALSE(solve_outer(k23(), 0));
    EXPECT_FALSE(oracle_outer(k23(), 0));
    EXPECT_TRUE(solve_outer(k23(), 1));

    auto c = cycle_graph(7);
    auto dc = solve_outer(c, 0);
    ASSERT_TRUE(dc);
    EXPECT_EQ(max_circular_crossing(c, *dc), 0);
}

TEST(Outer, ExhaustiveSmallConnectedGraphs) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_graphs(n))
            for (int k = 0; k <= 2; ++k) {
                auto got = solve_outer(g, k);
                auto want = oracle_outer(g, k);
                ASSERT_EQ(got.has_value(), want.has_value()) << "n=" << n << " k=" << k;
                if (got) EXPECT_TRUE(is_outer_k_planar(g, *got, k));
            }
}

TEST(Outer, OuterplanarMatchesMinorCharacterization) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : connected_graphs(n))
            ASSERT_EQ(solve_outer(g, 0).has_value(), outerplanar_by_minors(g)) << "n=" << n;
}

TEST(Outer, RandomAgreesWithOracle) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 400; ++it) {
        int n = 3 + static_cast<int>(draw_below(rng, 6));
        int extra = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(2 * n)));
        auto g = random_connected(n, extra, rng);
        int k = static_cast<int>(draw_below(rng, 3));
        auto got = solve_outer(g, k);
        auto want = oracle_outer(g, k);
        ASSERT_EQ(got.has_value(), want.has_value()) << "it=" << it << " k=" << k;
        if (got) EXPECT_TRUE(is_outer_k_planar(g, *got, k));
    }
}

TEST(Outer, CandidateEnumerationMatchesBruteForce) {
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 60) {
        int n = 4 + static_cast<int>(draw_below(rng, 5));
        auto g = random_connected(n, n, rng);
        if (!is_biconnected(g)) continue;
        Vertex u = static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(n)));
        Vertex v = (u + 1 + static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(n - 1)))) % n;
        int k = static_cast<int>(draw_below(rng, 3));
        EXPECT_EQ(enumerate_candidate_Rs(g, u, v, k), brute_candidates(g, u, v, k));
        ++checked;
    }
    EXPECT_THROW(enumerate_candidate_Rs(path_graph(4), 0, 3, 1), InputError);
}

TEST(Outer, TriangleFrameCrossings) {
    // One tau terminal whose edge goes to w, and the edge uv: they cross exactly when the
    // tau terminal sits between u and v and w is on the other side, which is always.
    CutMembership uv;
    uv.is_uv = true;
    CutMembership wl;
    wl.tau = 1;
    wl.apex = 'w';
    auto h = triangle_crossings(1, 0, 0, {uv, wl});
    EXPECT_EQ(h, (std::vector<int>{1, 1}));

    // Edge in tau1 and tau2 against the edge from v into R1.
    CutMembership r1r2;
    r1r2.tau1 = 1;
    r1r2.tau2 = 1;
    CutMembership vr1;
    vr1.tau1 = 2;
    vr1.apex = 'v';
    // frame: u=0, v=1, t2_1=2, w=3, t1_2=4, t1_1=5
    h = triangle_crossings(0, 2, 1, {r1r2, vr1});
    EXPECT_EQ(h, (std::vector<int>{1, 1}));

    CutMembership bad;
    bad.tau = bad.tau1 = bad.tau2 = 1;
    EXPECT_THROW(triangle_crossings(1, 1, 1, {bad}), InvariantError);
}

TEST(Outer, TraceIsConsistentAndVerifiable) {
    std::mt19937_64 rng(17);
    int yes = 0;
    for (int it = 0; it < 200 && yes < 60; ++it) {
        int n = 4 + static_cast<int>(draw_below(rng, 5));
        auto g = random_connected(n, static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n + 2))), rng);
        if (!is_biconnected(g)) continue;
        int k = static_cast<int>(draw_below(rng, 3));
        auto r = solve_outer_biconnected_traced(g, k);
        if (!r) continue;
        ++yes;
        ASSERT_FALSE(r->nodes.empty());
        for (const auto& node : r->nodes) {
            EXPECT_TRUE(verify_subproblem(g, k, node.sub, node.seq)) << [&] {
                std::string m = "k=" + std::to_string(k) + " edges:";
                for (auto& e : g.edges()) m += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
                m += " u=" + std::to_string(node.sub.u) + " v=" + std::to_string(node.sub.v) + " tau:";
                for (auto t : node.sub.tau) m += " " + std::to_string(t);
                m += " chi:";
                for (auto t : node.sub.chi) m += " " + std::to_string(t);
                m += " seq:";
                for (auto t : node.seq) m += " " + std::to_string(t);
                return m;
            }();
            if (node.split) {
                EXPECT_TRUE(check_consistency(g, k, node.sub, *node.split));
                EXPECT_LE(pierce_count(g, r->drawing, node.sub.u, node.split->w), k);
                EXPECT_LE(pierce_count(g, r->drawing, node.sub.v, node.split->w), k);
            }
        }
    }
    EXPECT_GT(yes, 20);
}

TEST(Outer, ConsistencyRejectsTamperedChi) {
    auto g = complete_graph(5);
    auto r = solve_outer_biconnected_traced(g, 2);
    ASSERT_TRUE(r);
    bool tampered = false;
    for (const auto& node : r->nodes) {
        if (!node.split || node.sub.chi.empty()) continue;
        OuterSubproblem p = node.sub;
        p.chi[0] += 1;
        EXPECT_FALSE(check_consistency(g, 2, p, *node.split));
        p.chi[0] = -1;
        EXPECT_FALSE(verify_subproblem(g, 2, p, node.seq));
        tampered = true;
    }
    EXPECT_TRUE(tampered);
}

TEST(Outer, RejectsNonBiconnectedBlockInput) {
    EXPECT_THROW(solve_outer_biconnected(path_graph(4), 1), InputError);
    EXPECT_THROW(solve_outer(path_graph(3), -1), InputError);
}

TEST(Outer, ForestsAndCutVerticesStitch) {
    Graph g(9);
    // Two triangles sharing vertex 2, a pendant path and an isolated vertex.
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(2, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    auto d = solve_outer(g, 0);
    ASSERT_TRUE(d);
    EXPECT_TRUE(is_outer_k_planar(g, *d, 0));
}

TEST(Outer, TableCapRaisesResourceError) {
    SolverOptions opt;
    opt.table_cap = 3;
    EXPECT_THROW(solve_outer(complete_graph(6), 3, opt), ResourceError);
}

TEST(Outer, ParallelJobsAgree) {
    std::mt19937_64 rng(23);
    SolverOptions par;
    par.jobs = 3;
    for (int it = 0; it < 80; ++it) {
        int n = 4 + static_cast<int>(draw_below(rng, 5));
        auto g = random_connected(n, n, rng);
        int k = static_cast<int>(draw_below(rng, 3));
        auto a = solve_outer(g, k);
        auto b = solve_outer(g, k, par);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) EXPECT_EQ(a->cycle, b->cycle);
    }
}
