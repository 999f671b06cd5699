#include "localcross/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "localcross/errors.hpp"

namespace localcross {

namespace {

void require_tree(const Graph& t) {
    if (!is_tree(t)) throw InputError("input graph is not a tree");
}

}  // namespace

PartitionGadget build_partition_gadget(const std::vector<std::int64_t>& a) {
    if (a.empty()) throw InputError("partition instance must be nonempty");
    std::int64_t sum = 0;
    for (auto x : a) {
        if (x <= 0) throw InputError("partition values must be positive");
        sum += x;
    }
    const int n = static_cast<int>(a.size());
    const Vertex y_mid = n + 2;
    Graph g(2 * n + 3);
    g.add_edge(0, y_mid, 1);
    for (int i = 1; i <= n; ++i) g.add_edge(i, y_mid + i, 2 * a[static_cast<std::size_t>(i - 1)]);
    g.add_edge(n + 1, y_mid, 1);
    std::vector<Vertex> xs(static_cast<std::size_t>(n + 2));
    std::iota(xs.begin(), xs.end(), 0);
    return {BipartiteInstance(std::move(g), xs, xs), sum + 1};
}

std::optional<PartitionGadget> partition_to_weighted_one_sided(const std::vector<std::int64_t>& a) {
    auto gadget = build_partition_gadget(a);
    if ((gadget.k - 1) % 2 != 0) return std::nullopt;
    return gadget;
}

TwoLayerDrawing partition_witness(const std::vector<std::int64_t>& a, std::uint64_t left_mask) {
    const int n = static_cast<int>(a.size());
    TwoLayerDrawing d;
    for (Vertex x = 0; x < n + 2; ++x) d.x_order.push_back(x);
    const Vertex y_mid = n + 2;
    for (int i = 0; i < n; ++i)
        if (left_mask >> i & 1u) d.y_order.push_back(y_mid + 1 + i);
    d.y_order.push_back(y_mid);
    for (int i = 0; i < n; ++i)
        if (!(left_mask >> i & 1u)) d.y_order.push_back(y_mid + 1 + i);
    return d;
}

TwoSidedBandwidthGadget bandwidth_tree_to_two_sided(const Graph& tree, int b) {
    require_tree(tree);
    if (b < 1) throw InputError("bandwidth bound must be at least 1");
    const int n = tree.vertex_count();
    const int m = tree.edge_count();
    const int l = 2 * b * b;
    Graph g(n + m + n * l);
    for (EdgeId e = 0; e < m; ++e) {
        g.add_edge(tree.edge(e).u, n + e);
        g.add_edge(tree.edge(e).v, n + e);
    }
    for (Vertex v = 0; v < n; ++v)
        for (int j = 0; j < l; ++j) g.add_edge(v, n + m + v * l + j);
    std::vector<Vertex> xs(static_cast<std::size_t>(n));
    std::iota(xs.begin(), xs.end(), 0);
    TwoSidedBandwidthGadget out{BipartiteInstance(std::move(g), xs), l * (b - 1) / 2 + 2 * b - 2, l};
    return out;
}

TwoLayerDrawing two_sided_witness_from_layout(const Graph& tree, int b, const LinearLayout& layout) {
    require_tree(tree);
    validate_layout(tree, layout);
    const int n = tree.vertex_count();
    const int m = tree.edge_count();
    const int l = 2 * b * b;
    auto pos = positions(layout.order, n);
    // Pendant slot s gets key 2s; a subdivision vertex sitting before slot s gets 2s-1.
    std::vector<std::tuple<std::int64_t, int, Vertex>> keyed;
    for (Vertex v = 0; v < n; ++v)
        for (int j = 0; j < l; ++j)
            keyed.emplace_back(2 * (static_cast<std::int64_t>(pos[v]) * l + j), 0, n + m + v * l + j);
    for (EdgeId e = 0; e < m; ++e) {
        int a = std::min(pos[tree.edge(e).u], pos[tree.edge(e).v]);
        int c = std::max(pos[tree.edge(e).u], pos[tree.edge(e).v]);
        std::int64_t median = static_cast<std::int64_t>(a + 1 + c) * l / 2;
        keyed.emplace_back(2 * median - 1, a, n + e);
    }
    std::sort(keyed.begin(), keyed.end());
    TwoLayerDrawing d;
    d.x_order = layout.order;
    for (const auto& [key, tie, y] : keyed) d.y_order.push_back(y);
    return d;
}

Graph tree_to_apex(const Graph& tree) {
    require_tree(tree);
    const int n = tree.vertex_count();
    Graph g(n + 1);
    for (const auto& e : tree.edges()) g.add_edge(e.u, e.v);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, n);
    return g;
}

CircularDrawing apex_drawing_from_layout(const Graph& tree, const LinearLayout& layout) {
    validate_layout(tree, layout);
    CircularDrawing d;
    d.cycle.push_back(tree.vertex_count());
    d.cycle.insert(d.cycle.end(), layout.order.begin(), layout.order.end());
    return d;
}

LinearLayout layout_from_outer_drawing(const Graph& tree, const CircularDrawing& drawing) {
    const int n = tree.vertex_count();
    const auto& cyc = drawing.cycle;
    if (static_cast<int>(cyc.size()) != n + 1) throw InputError("drawing does not match the apex graph");
    auto it = std::find(cyc.begin(), cyc.end(), n);
    if (it == cyc.end()) throw InputError("drawing does not contain the apex vertex");
    LinearLayout out;
    out.order.insert(out.order.end(), it + 1, cyc.end());
    out.order.insert(out.order.end(), cyc.begin(), it);
    validate_layout(tree, out);
    return out;
}

CliquePath clique_path(int t, int l) {
    if (t < 2) throw InputError("clique size must be at least 2");
    if (l < 3 || l % 2 == 0) throw InputError("clique path length must be odd and greater than 1");
    CliquePath cp;
    cp.t = t;
    cp.l = l;
    cp.graph = Graph((l - 1) * (t - 1) + 1);
    auto id = [t](int i, int j) { return (i - 1) * (t - 1) + (j - 1); };
    for (int i = 1; i <= l - 1; ++i)
        for (int a = 1; a <= t; ++a)
            for (int c = a + 1; c <= t; ++c) cp.graph.add_edge(id(i, a), id(i, c));
    for (int i = 1; i <= l - 1; ++i) cp.anchors.push_back(id(i, 1));
    cp.anchors.push_back(id(l - 1, t));
    cp.middle = id((l - 1) / 2, t);
    return cp;
}

OuterBandwidthGadget outer_gadget_parameters(int tree_vertices, int b) {
    if (b < 3) throw InputError("bandwidth bound for the outer gadget must be at least 3");
    OuterBandwidthGadget g;
    g.t = 4 * (b * b + 1) + 2;
    g.l = 4 * b * b * b + 1;
    g.k = 4 * (b * b + 1) * (b * b + 1);
    g.gadget_size = (g.l - 1) * (g.t - 1) + 1;
    g.apex = tree_vertices * g.gadget_size;
    return g;
}

OuterBandwidthGadget bandwidth_tree_to_outer(const Graph& tree, int b) {
    require_tree(tree);
    const int n = tree.vertex_count();
    auto out = outer_gadget_parameters(n, b);
    const auto cp = clique_path(out.t, out.l);
    const int s = out.gadget_size;
    out.graph = Graph(n * s + 1);
    for (Vertex v = 0; v < n; ++v) {
        for (const auto& e : cp.graph.edges()) out.graph.add_edge(v * s + e.u, v * s + e.v);
        for (Vertex a : cp.anchors) out.graph.add_edge(v * s + a, out.apex);
    }
    for (const auto& e : tree.edges()) out.graph.add_edge(e.u * s + cp.middle, e.v * s + cp.middle);
    return out;
}

CircularDrawing outer_witness_from_layout(const Graph& tree, int b, const LinearLayout& layout) {
    validate_layout(tree, layout);
    auto p = outer_gadget_parameters(tree.vertex_count(), b);
    CircularDrawing d;
    d.cycle.push_back(p.apex);
    for (Vertex v : layout.order)
        for (int i = 0; i < p.gadget_size; ++i) d.cycle.push_back(v * p.gadget_size + i);
    return d;
}

}  // namespace localcross
