#include "localcross/one_sided.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "frontier.hpp"
#include "localcross/errors.hpp"

namespace localcross {

namespace {

using detail::Frontier;
using detail::FrontierEngine;
using Key = std::vector<std::int64_t>;

bool obs_non_leaf_ok(const Graph& g, int k) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int non_leaf = 0;
        for (Vertex u : g.neighbors(v))
            if (g.degree(u) >= 2) ++non_leaf;
        if (non_leaf > 2 * k + 2) return false;
    }
    return true;
}

// Restricts `inst` to `keep` (input ids). The fixed order, if any, is filtered accordingly.
BipartiteInstance restrict_instance(const BipartiteInstance& inst, const std::vector<Vertex>& keep,
                                    std::vector<Vertex>& to_original) {
    auto sub = induced_subgraph(inst.graph(), keep);
    std::vector<Vertex> xs;
    for (Vertex v : inst.x_side())
        if (sub.from_original[v] >= 0) xs.push_back(sub.from_original[v]);
    std::optional<std::vector<Vertex>> order;
    if (inst.fixed_x_order()) {
        order.emplace();
        for (Vertex v : *inst.fixed_x_order())
            if (sub.from_original[v] >= 0) order->push_back(sub.from_original[v]);
    }
    to_original = sub.to_original;
    return BipartiteInstance(std::move(sub.graph), std::move(xs), std::move(order));
}

struct Trace {
    int parent;
    std::vector<Vertex> dropped;
};

struct Node {
    Frontier fr;
    Key key;
};

// Frontier DP over the fixed X order of an instance without isolated vertices. Returns the Y order.
std::optional<std::vector<Vertex>> run_one_sided_dp(const BipartiteInstance& inst, Weight k,
                                                    WeightMode mode, const SolverOptions& opt,
                                                    SolveStats& stats) {
    const Graph& g = inst.graph();
    const auto& xs = *inst.fixed_x_order();
    const int N = static_cast<int>(xs.size());
    if (N == 0) return std::vector<Vertex>{};

    // closes_at[j]: X vertices whose edges become final once j vertices have been processed.
    std::vector<std::vector<Vertex>> closes_at(static_cast<std::size_t>(N) + 1);
    for (int p = 0; p < N; ++p) {
        int j = -1;
        if (opt.window == WindowPolicy::Fixed) {
            j = p + 1 + 2 * static_cast<int>(std::min<Weight>(k, N));
        } else {
            std::int64_t sum = 0;
            for (int q = p + 1; q < N; ++q) {
                sum += g.degree(xs[q]);
                if (sum >= 2 * k + 1) {
                    j = q + 1;
                    break;
                }
            }
        }
        if (j >= 0 && j <= N) closes_at[j].push_back(xs[p]);
    }

    FrontierEngine engine(inst, k, mode);
    std::vector<std::vector<Trace>> traces(static_cast<std::size_t>(N) + 1);
    std::vector<Node> layer(1);
    layer[0].fr.append_key(layer[0].key);
    traces[0].push_back({-1, {}});
    std::vector<char> processed(static_cast<std::size_t>(g.vertex_count()), 0);

    for (int j = 0; j < N; ++j) {
        Vertex x = xs[j];
        std::vector<char> after = processed;
        after[x] = 1;
        std::vector<int> order(layer.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return layer[a].key < layer[b].key; });

        std::vector<Node> next;
        std::unordered_map<Key, int, detail::KeyHash> seen;
        for (int idx : order) {
            engine.expand(layer[idx].fr, x, processed, [&](Frontier&& f) {
                std::vector<Vertex> dropped;
                if (!engine.close(f, closes_at[j + 1], after, dropped)) return;
                Node node;
                node.fr = std::move(f);
                node.fr.append_key(node.key);
                if (seen.count(node.key)) return;
                if (++stats.entries_created > opt.table_cap)
                    throw ResourceError("one-sided DP exceeded table cap of " +
                                        std::to_string(opt.table_cap) + " entries");
                seen.emplace(node.key, static_cast<int>(next.size()));
                traces[j + 1].push_back({idx, std::move(dropped)});
                next.push_back(std::move(node));
            });
        }
        stats.peak_entries = std::max<std::int64_t>(stats.peak_entries,
                                                    static_cast<std::int64_t>(next.size()));
        if (next.empty()) return std::nullopt;
        layer = std::move(next);
        processed = std::move(after);
    }

    int best = 0;
    for (int i = 1; i < static_cast<int>(layer.size()); ++i)
        if (layer[i].key < layer[best].key) best = i;

    std::vector<std::vector<Vertex>> pieces;
    int cur = best;
    for (int j = N; j > 0; --j) {
        const auto& t = traces[j][cur];
        pieces.push_back(t.dropped);
        cur = t.parent;
    }
    std::vector<Vertex> y_order;
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
        y_order.insert(y_order.end(), it->begin(), it->end());
    y_order.insert(y_order.end(), layer[best].fr.live.begin(), layer[best].fr.live.end());
    return y_order;
}

std::optional<TwoLayerDrawing> solve_impl(const BipartiteInstance& inst, Weight k, WeightMode mode,
                                          bool reductions, const SolverOptions& opt,
                                          SolveStats* stats_out) {
    if (!inst.fixed_x_order()) throw InputError("one-sided problem needs a fixed X order");
    if (k < 0) throw InputError("k must be nonnegative");
    SolveStats local;
    SolveStats& stats = stats_out ? *stats_out : local;
    const Graph& g = inst.graph();

    BipartiteInstance work = inst;
    std::vector<Vertex> to_input(static_cast<std::size_t>(g.vertex_count()));
    std::iota(to_input.begin(), to_input.end(), 0);
    std::vector<std::pair<Vertex, Vertex>> removed;
    if (reductions) {
        auto red = reduce_degrees(inst, static_cast<int>(k), Side::X);
        if (!red) return std::nullopt;
        work = red->instance;
        to_input = red->to_original;
        removed = red->removed_leaves;
    }

    std::vector<Vertex> keep;
    for (Vertex v = 0; v < work.graph().vertex_count(); ++v)
        if (work.graph().degree(v) > 0) keep.push_back(v);
    std::vector<Vertex> core_to_work;
    BipartiteInstance core = restrict_instance(work, keep, core_to_work);

    auto ys = run_one_sided_dp(core, k, mode, opt, stats);
    if (!ys) return std::nullopt;

    TwoLayerDrawing d;
    d.x_order = *inst.fixed_x_order();
    for (Vertex y : *ys) d.y_order.push_back(to_input[core_to_work[y]]);
    if (!removed.empty()) d = reinsert_leaves(inst, std::move(d), removed, static_cast<int>(k));
    for (Vertex y : inst.y_side())
        if (g.degree(y) == 0) d.y_order.push_back(y);

    if (!is_two_layer_k_planar(inst, d, k, mode))
        throw InvariantError("one-sided DP produced a drawing that fails verification");
    return d;
}

}  // namespace

std::optional<DegreeReducedInstance> reduce_degrees(const BipartiteInstance& inst, int k,
                                                    Side side) {
    if (k < 0) throw InputError("k must be nonnegative");
    const Graph& g = inst.graph();
    if (!obs_non_leaf_ok(g, k)) return std::nullopt;

    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    DegreeReducedInstance out;
    const int limit = 2 * k + 2;
    for (Vertex v : inst.side(side)) {
        if (deg[v] <= limit) continue;
        for (Vertex u : g.neighbors(v)) {
            if (deg[v] <= limit) break;
            if (gone[u] || g.degree(u) != 1) continue;
            gone[u] = 1;
            --deg[v];
            out.removed_leaves.emplace_back(u, v);
        }
        if (deg[v] > limit)
            throw InvariantError("vertex above the degree bound without a leaf neighbour");
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (!gone[v]) keep.push_back(v);
    out.instance = restrict_instance(inst, keep, out.to_original);
    return out;
}

TwoLayerDrawing reinsert_leaves(const BipartiteInstance& original, TwoLayerDrawing drawing,
                                const std::vector<std::pair<Vertex, Vertex>>& removed, int k) {
    const Graph& g = original.graph();
    std::vector<char> present(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : drawing.x_order) present[v] = 1;
    for (Vertex v : drawing.y_order) present[v] = 1;
    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        auto [leaf, anchor] = *it;
        auto& layer = original.is_x(leaf) ? drawing.x_order : drawing.y_order;
        std::vector<int> where;
        for (std::size_t i = 0; i < layer.size(); ++i)
            if (present[layer[i]] && g.adjacent(anchor, layer[i])) where.push_back(static_cast<int>(i));
        if (static_cast<int>(where.size()) < k + 2)
            throw InvariantError("anchor of a removed leaf has fewer than k+2 neighbours");
        layer.insert(layer.begin() + where[static_cast<std::size_t>(k + 1)], leaf);
        present[leaf] = 1;
    }
    return drawing;
}

int dynamic_window(const BipartiteInstance& inst, int k, int i) {
    if (!inst.fixed_x_order()) throw InputError("dynamic window needs a fixed X order");
    const auto& xs = *inst.fixed_x_order();
    const int N = static_cast<int>(xs.size());
    if (i < 0 || i >= N) throw InputError("window start out of range");
    std::int64_t sum = 0;
    for (int l = 0; i + l < N; ++l) {
        sum += inst.graph().degree(xs[i + l]);
        if (sum >= 2 * k + 1) return l;
    }
    return N - 1 - i;
}

std::optional<TwoLayerDrawing> solve_one_sided(const BipartiteInstance& inst, int k,
                                               const SolverOptions& options, SolveStats* stats) {
    return solve_impl(inst, k, WeightMode::Count, true, options, stats);
}

std::optional<TwoLayerDrawing> solve_one_sided_weighted(const BipartiteInstance& inst, Weight k,
                                                        WeightMode mode,
                                                        const SolverOptions& options,
                                                        SolveStats* stats) {
    return solve_impl(inst, k, mode, false, options, stats);
}

}  // namespace localcross
