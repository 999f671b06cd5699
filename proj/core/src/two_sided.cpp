#include "localcross/two_sided.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "frontier.hpp"
#include "localcross/errors.hpp"

namespace localcross {

std::vector<std::vector<Vertex>> components_outside_window(const Graph& g,
                                                           const std::vector<Vertex>& window) {
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex s : window) {
        removed.at(static_cast<std::size_t>(s)) = 1;
        for (Vertex y : g.neighbors(s)) removed[y] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    auto comps = connected_components(sub.graph);
    for (auto& c : comps)
        for (auto& v : c) v = sub.to_original[v];
    return comps;
}

bool check_separator_property(const BipartiteInstance& inst, const TwoLayerDrawing& drawing,
                              const std::vector<Vertex>& window) {
    validate_drawing(inst, drawing);
    if (window.empty()) return true;
    auto pos = positions(drawing.x_order, inst.graph().vertex_count());
    int lo = static_cast<int>(drawing.x_order.size()), hi = -1;
    for (Vertex s : window) {
        if (!inst.is_x(s)) throw InputError("window vertex is not on the X side");
        lo = std::min(lo, pos[s]);
        hi = std::max(hi, pos[s]);
    }
    if (hi - lo + 1 != static_cast<int>(window.size()))
        throw InputError("window is not consecutive in the X order");
    for (const auto& comp : components_outside_window(inst.graph(), window)) {
        bool left = false, right = false;
        for (Vertex v : comp) {
            if (!inst.is_x(v)) continue;
            (pos[v] < lo ? left : right) = true;
        }
        if (left && right) return false;
    }
    return true;
}

namespace {

using detail::Frontier;
using detail::FrontierEngine;
using Key = std::vector<std::int64_t>;

struct WindowInfo {
    std::vector<std::vector<Vertex>> comp_x;  // X vertices per component
    std::vector<Vertex> comp_id;              // smallest vertex per component
};

struct Node {
    std::vector<Vertex> window;   // placement order, oldest first
    std::vector<Vertex> done;     // ids of processed components, ascending
    Frontier fr;
    Key key;
};

struct Trace {
    int parent;
    Vertex x;
    std::vector<Vertex> dropped;
};

void make_key(Node& n) {
    n.key.clear();
    n.key.push_back(static_cast<std::int64_t>(n.window.size()));
    for (Vertex v : n.window) n.key.push_back(v);
    n.key.push_back(static_cast<std::int64_t>(n.done.size()));
    for (Vertex c : n.done) n.key.push_back(c);
    n.fr.append_key(n.key);
}

class TwoSidedDp {
public:
    TwoSidedDp(const BipartiteInstance& inst, int k, const SolverOptions& opt, SolveStats& stats)
        : inst_(inst), g_(inst.graph()), k_(k), opt_(opt), stats_(stats),
          engine_(inst, k, WeightMode::Count) {}

    // inst_ must be connected with at least one edge.
    std::optional<TwoLayerDrawing> run() {
        const int N = static_cast<int>(inst_.x_side().size());
        const std::size_t width = static_cast<std::size_t>(2 * k_ + 1);
        const std::int64_t comp_bound =
            static_cast<std::int64_t>(2 * k_ + 2) * (2 * k_ + 1) * (2 * k_ + 1);

        std::vector<std::vector<Trace>> traces(static_cast<std::size_t>(N) + 1);
        std::vector<Node> layer(1);
        make_key(layer[0]);
        traces[0].push_back({-1, -1, {}});

        for (int j = 0; j < N; ++j) {
            std::vector<int> order(layer.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return layer[a].key < layer[b].key; });
            std::vector<Node> next;
            std::unordered_map<Key, int, detail::KeyHash> seen;

            for (int idx : order) {
                const Node& cur = layer[idx];
                std::vector<char> processed = processed_mask(cur);
                for (Vertex x : inst_.x_side()) {
                    if (processed[x]) continue;
                    std::vector<Vertex> window = cur.window;
                    window.push_back(x);
                    if (window.size() > width) window.erase(window.begin());
                    std::vector<char> after = processed;
                    after[x] = 1;

                    const WindowInfo& info = window_info(window);
                    stats_.max_component_count = std::max<std::int64_t>(
                        stats_.max_component_count, static_cast<std::int64_t>(info.comp_id.size()));
                    if (static_cast<std::int64_t>(info.comp_id.size()) > comp_bound)
                        throw InvariantError("component count above (2k+2)(2k+1)^2");
                    std::vector<Vertex> done;
                    bool separated = true;
                    for (std::size_t c = 0; c < info.comp_x.size() && separated; ++c) {
                        std::size_t in = 0;
                        for (Vertex v : info.comp_x[c]) in += after[v] ? 1 : 0;
                        if (in == info.comp_x[c].size()) done.push_back(info.comp_id[c]);
                        else if (in != 0) separated = false;
                    }
                    if (!separated) continue;

                    std::vector<Vertex> closing;
                    if (window.size() == width) closing.push_back(window.front());

                    engine_.expand(cur.fr, x, processed, [&](Frontier&& f) {
                        std::vector<Vertex> dropped;
                        if (!engine_.close(f, closing, after, dropped)) return;
                        Node node;
                        node.window = window;
                        node.done = done;
                        node.fr = std::move(f);
                        make_key(node);
                        if (seen.count(node.key)) return;
                        if (++stats_.entries_created > opt_.table_cap)
                            throw ResourceError("two-sided DP exceeded table cap of " +
                                                std::to_string(opt_.table_cap) + " entries");
                        seen.emplace(node.key, static_cast<int>(next.size()));
                        traces[j + 1].push_back({idx, x, std::move(dropped)});
                        next.push_back(std::move(node));
                    });
                }
            }
            stats_.peak_entries =
                std::max<std::int64_t>(stats_.peak_entries, static_cast<std::int64_t>(next.size()));
            if (next.empty()) return std::nullopt;
            layer = std::move(next);
        }

        int best = 0;
        for (int i = 1; i < static_cast<int>(layer.size()); ++i)
            if (layer[i].key < layer[best].key) best = i;
        TwoLayerDrawing d;
        std::vector<std::vector<Vertex>> pieces;
        int cur = best;
        for (int j = N; j > 0; --j) {
            const auto& t = traces[j][cur];
            d.x_order.push_back(t.x);
            pieces.push_back(t.dropped);
            cur = t.parent;
        }
        std::reverse(d.x_order.begin(), d.x_order.end());
        for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
            d.y_order.insert(d.y_order.end(), it->begin(), it->end());
        d.y_order.insert(d.y_order.end(), layer[best].fr.live.begin(), layer[best].fr.live.end());
        return d;
    }

private:
    std::vector<char> processed_mask(const Node& n) {
        std::vector<char> mask(static_cast<std::size_t>(g_.vertex_count()), 0);
        for (Vertex s : n.window) mask[s] = 1;
        if (!n.done.empty()) {
            const WindowInfo& info = window_info(n.window);
            for (std::size_t c = 0; c < info.comp_id.size(); ++c) {
                if (std::binary_search(n.done.begin(), n.done.end(), info.comp_id[c]))
                    for (Vertex v : info.comp_x[c]) mask[v] = 1;
            }
        }
        return mask;
    }

    const WindowInfo& window_info(const std::vector<Vertex>& window) {
        std::vector<Vertex> sorted = window;
        std::sort(sorted.begin(), sorted.end());
        auto it = cache_.find(sorted);
        if (it != cache_.end()) return it->second;
        WindowInfo info;
        for (auto& comp : components_outside_window(g_, sorted)) {
            std::vector<Vertex> xs;
            for (Vertex v : comp)
                if (inst_.is_x(v)) xs.push_back(v);
            info.comp_id.push_back(comp.front());
            info.comp_x.push_back(std::move(xs));
        }
        return cache_.emplace(std::move(sorted), std::move(info)).first->second;
    }

    const BipartiteInstance& inst_;
    const Graph& g_;
    int k_;
    const SolverOptions& opt_;
    SolveStats& stats_;
    FrontierEngine engine_;
    std::map<std::vector<Vertex>, WindowInfo> cache_;
};

std::optional<TwoLayerDrawing> solve_component(const BipartiteInstance& comp, int k,
                                               const SolverOptions& opt, SolveStats& stats) {
    const Graph& g = comp.graph();
    if (g.edge_count() == 0) {
        return TwoLayerDrawing{comp.x_side(), comp.y_side()};
    }
    auto rx = reduce_degrees(comp, k, Side::X);
    if (!rx) return std::nullopt;
    auto ry = reduce_degrees(rx->instance, k, Side::Y);
    if (!ry) return std::nullopt;
    const BipartiteInstance& core = ry->instance;

    TwoSidedDp dp(core, k, opt, stats);
    auto d = dp.run();
    if (!d) return std::nullopt;

    // Back to the ids of rx->instance, undo the Y-side removals, then to comp ids and undo X-side.
    auto map_ids = [](TwoLayerDrawing dr, const std::vector<Vertex>& to) {
        for (auto& v : dr.x_order) v = to[v];
        for (auto& v : dr.y_order) v = to[v];
        return dr;
    };
    TwoLayerDrawing mid = map_ids(std::move(*d), ry->to_original);
    mid = reinsert_leaves(rx->instance, std::move(mid), ry->removed_leaves, k);
    TwoLayerDrawing full = map_ids(std::move(mid), rx->to_original);
    return reinsert_leaves(comp, std::move(full), rx->removed_leaves, k);
}

}  // namespace

std::optional<TwoLayerDrawing> solve_two_sided(const BipartiteInstance& inst, int k,
                                               const SolverOptions& options, SolveStats* stats_out) {
    if (k < 0) throw InputError("k must be nonnegative");
    SolveStats local;
    SolveStats& stats = stats_out ? *stats_out : local;
    const Graph& g = inst.graph();
    TwoLayerDrawing out;
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        std::vector<Vertex> xs;
        for (Vertex v : comp)
            if (inst.is_x(v)) xs.push_back(sub.from_original[v]);
        BipartiteInstance ci(sub.graph, xs);
        auto d = solve_component(ci, k, options, stats);
        if (!d) return std::nullopt;
        for (Vertex v : d->x_order) out.x_order.push_back(sub.to_original[v]);
        for (Vertex v : d->y_order) out.y_order.push_back(sub.to_original[v]);
    }
    if (!is_two_layer_k_planar(inst, out, k))
        throw InvariantError("two-sided DP produced a drawing that fails verification");
    return out;
}

}  // namespace localcross
