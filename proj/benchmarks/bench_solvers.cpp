#include <benchmark/benchmark.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <vector>

#include "localcross/generators.hpp"
#include "localcross/io.hpp"
#include "localcross/one_sided.hpp"
#include "localcross/oracle.hpp"
#include "localcross/outer.hpp"
#include "localcross/reductions.hpp"
#include "localcross/two_sided.hpp"

using namespace localcross;

namespace {

// x_i adjacent to y_i .. y_{i+width}; X in index order.
BipartiteInstance banded(int n, int width) {
    Graph g(2 * n + width);
    std::vector<Vertex> xs;
    for (int i = 0; i < n; ++i) {
        xs.push_back(i);
        for (int j = 0; j <= width; ++j) g.add_edge(i, n + i + j);
    }
    return BipartiteInstance(g, xs, xs);
}

// Cycle 0..n-1 with chords (i, i+2) for even i and (i, i+3) for i divisible by 4.
Graph cycle_with_chords(int n) {
    Graph g = cycle_graph(n);
    for (int i = 0; i + 2 < n; i += 2) g.add_edge(i, i + 2);
    for (int i = 1; i + 3 < n; i += 4)
        if (!g.adjacent(i, i + 3)) g.add_edge(i, i + 3);
    return g;
}

std::vector<Graph> corpus(const char* sub) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(
             std::filesystem::path(LOCALCROSS_TEST_DATA) / sub))
        files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<Graph> out;
    for (const auto& f : files) out.push_back(read_instance_file(f.string()).graph);
    return out;
}

void BM_OneSidedBanded(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    SolverOptions opt;
    opt.window = state.range(2) ? WindowPolicy::Dynamic : WindowPolicy::Fixed;
    auto inst = banded(n, 1);
    SolveStats stats;
    for (auto _ : state) {
        stats = {};
        benchmark::DoNotOptimize(solve_one_sided(inst, k, opt, &stats));
    }
    state.counters["entries"] = static_cast<double>(stats.entries_created);
    state.SetComplexityN(n);
}
BENCHMARK(BM_OneSidedBanded)
    ->ArgsProduct({{25, 50, 100, 200}, {1, 2, 3}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_OneSidedRandom(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    auto base = random_connected_bipartite(12, 14, 6, rng);
    auto xs = base.x_side();
    auto inst = base.with_x_order(xs);
    for (auto _ : state) benchmark::DoNotOptimize(solve_one_sided(inst, k));
}
BENCHMARK(BM_OneSidedRandom)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_TwoSidedCaterpillar(benchmark::State& state) {
    auto inst = BipartiteInstance::from_coloring(caterpillar(static_cast<int>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(solve_two_sided(inst, 1));
}
BENCHMARK(BM_TwoSidedCaterpillar)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_TwoSidedRandomTree(benchmark::State& state) {
    std::mt19937_64 rng(13);
    auto inst = BipartiteInstance::from_coloring(random_tree(static_cast<int>(state.range(0)), rng));
    const int k = static_cast<int>(state.range(1));
    SolveStats stats;
    for (auto _ : state) {
        stats = {};
        benchmark::DoNotOptimize(solve_two_sided(inst, k, {}, &stats));
    }
    state.counters["entries"] = static_cast<double>(stats.entries_created);
}
BENCHMARK(BM_TwoSidedRandomTree)
    ->ArgsProduct({{8, 12, 16}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_OuterCorpusN12(benchmark::State& state) {
    static const auto graphs = corpus("outer_n12");
    for (auto _ : state)
        for (const auto& g : graphs) benchmark::DoNotOptimize(solve_outer(g, 1));
    state.counters["graphs"] = static_cast<double>(graphs.size());
}
BENCHMARK(BM_OuterCorpusN12)->Unit(benchmark::kMillisecond);

void BM_OuterChords(benchmark::State& state) {
    Graph g = cycle_with_chords(static_cast<int>(state.range(0)));
    const int k = static_cast<int>(state.range(1));
    SolveStats stats;
    for (auto _ : state) {
        stats = {};
        benchmark::DoNotOptimize(solve_outer(g, k, {}, &stats));
    }
    state.counters["entries"] = static_cast<double>(stats.entries_created);
}
BENCHMARK(BM_OuterChords)
    ->ArgsProduct({{8, 10, 12, 14}, {0, 1, 2}})
    ->Unit(benchmark::kMillisecond);

// Twenty seeded random connected graphs on n vertices with n/2 extra edges, mixed YES/NO at k = 1.
std::vector<Graph> random_batch(int n) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    std::vector<Graph> out;
    for (int i = 0; i < 20; ++i) out.push_back(random_connected(n, n / 2, rng));
    return out;
}

void BM_OuterOracleRandom(benchmark::State& state) {
    auto graphs = random_batch(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& g : graphs) benchmark::DoNotOptimize(oracle_outer(g, 1));
}
BENCHMARK(BM_OuterOracleRandom)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_OuterSolverRandom(benchmark::State& state) {
    auto graphs = random_batch(static_cast<int>(state.range(0)));
    int yes = 0;
    for (auto _ : state) {
        yes = 0;
        for (const auto& g : graphs) yes += solve_outer(g, 1).has_value();
    }
    state.counters["yes"] = yes;
}
BENCHMARK(BM_OuterSolverRandom)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_BandwidthToOuterGadget(benchmark::State& state) {
    Graph t = path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bandwidth_tree_to_outer(t, 3));
}
BENCHMARK(BM_BandwidthToOuterGadget)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
