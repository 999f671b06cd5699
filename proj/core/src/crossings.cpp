#include "localcross/crossings.hpp"

#include <algorithm>
#include <cstdlib>

#include "localcross/errors.hpp"

namespace localcross {

const char* to_string(WeightMode m) {
    switch (m) {
        case WeightMode::Count: return "count";
        case WeightMode::Sum: return "sum";
        case WeightMode::Product: return "product";
    }
    return "?";
}

namespace {

struct LayerPositions {
    std::vector<int> pos;  // position within its own layer
};

LayerPositions layer_positions(const BipartiteInstance& inst, const TwoLayerDrawing& d) {
    validate_drawing(inst, d);
    LayerPositions lp;
    lp.pos.assign(static_cast<std::size_t>(inst.graph().vertex_count()), -1);
    for (std::size_t i = 0; i < d.x_order.size(); ++i) lp.pos[d.x_order[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < d.y_order.size(); ++i) lp.pos[d.y_order[i]] = static_cast<int>(i);
    return lp;
}

bool cross_at(const BipartiteInstance& inst, const std::vector<int>& pos, const Edge& e,
              const Edge& f) {
    if (e.shares_endpoint(f)) return false;
    Vertex ex = inst.is_x(e.u) ? e.u : e.v;
    Vertex fx = inst.is_x(f.u) ? f.u : f.v;
    Vertex ey = e.other(ex), fy = f.other(fx);
    return (pos[ex] < pos[fx]) != (pos[ey] < pos[fy]);
}

}  // namespace

bool two_layer_cross(const BipartiteInstance& inst, const TwoLayerDrawing& d, EdgeId e, EdgeId f) {
    const auto& g = inst.graph();
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    auto lp = layer_positions(inst, d);
    return cross_at(inst, lp.pos, a, b);
}

bool two_layer_cross(const BipartiteInstance& inst, const TwoLayerDrawing& d, const Edge& e,
                     const Edge& f) {
    const auto& g = inst.graph();
    return two_layer_cross(inst, d, g.edge_id(e.u, e.v), g.edge_id(f.u, f.v));
}

std::vector<int> two_layer_crossings_per_edge(const BipartiteInstance& inst,
                                              const TwoLayerDrawing& d) {
    auto lp = layer_positions(inst, d);
    const auto& es = inst.graph().edges();
    std::vector<int> out(es.size(), 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (cross_at(inst, lp.pos, es[i], es[j])) {
                ++out[i];
                ++out[j];
            }
        }
    }
    return out;
}

std::vector<Weight> two_layer_edge_loads(const BipartiteInstance& inst, const TwoLayerDrawing& d,
                                         WeightMode mode) {
    auto lp = layer_positions(inst, d);
    const auto& g = inst.graph();
    const auto& es = g.edges();
    std::vector<Weight> out(es.size(), 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (!cross_at(inst, lp.pos, es[i], es[j])) continue;
            Weight wi = g.weight(static_cast<EdgeId>(i)), wj = g.weight(static_cast<EdgeId>(j));
            switch (mode) {
                case WeightMode::Count:
                    out[i] += 1;
                    out[j] += 1;
                    break;
                case WeightMode::Sum:
                    out[i] += wj;
                    out[j] += wi;
                    break;
                case WeightMode::Product:
                    out[i] += wi * wj;
                    out[j] += wi * wj;
                    break;
            }
        }
    }
    return out;
}

bool is_two_layer_k_planar(const BipartiteInstance& inst, const TwoLayerDrawing& d, Weight k,
                           WeightMode mode) {
    try {
        validate_drawing(inst, d);
    } catch (const InputError&) {
        return false;
    }
    auto loads = two_layer_edge_loads(inst, d, mode);
    return std::all_of(loads.begin(), loads.end(), [k](Weight x) { return x <= k; });
}

namespace {

// Interleaving test on cycle positions; pairs sharing a vertex never interleave.
bool interleave(int a, int b, int c, int d) {
    if (a == c || a == d || b == c || b == d) return false;
    if (a > b) std::swap(a, b);
    bool c_in = a < c && c < b;
    bool d_in = a < d && d < b;
    return c_in != d_in;
}

std::vector<int> cycle_positions(const Graph& g, const CircularDrawing& d) {
    validate_drawing(g, d);
    return positions(d.cycle, g.vertex_count());
}

}  // namespace

bool circular_pierce(const Graph& g, const CircularDrawing& d, EdgeId e, Vertex a, Vertex b) {
    const Edge& ed = g.edge(e);
    if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count() || a == b)
        throw InputError("pierce pair must be two distinct vertices");
    auto pos = cycle_positions(g, d);
    return interleave(pos[ed.u], pos[ed.v], pos[a], pos[b]);
}

bool circular_pierce(const Graph& g, const CircularDrawing& d, const Edge& e, Vertex a, Vertex b) {
    return circular_pierce(g, d, g.edge_id(e.u, e.v), a, b);
}

int pierce_count(const Graph& g, const CircularDrawing& d, Vertex a, Vertex b) {
    if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count() || a == b)
        throw InputError("pierce pair must be two distinct vertices");
    auto pos = cycle_positions(g, d);
    int c = 0;
    for (const auto& e : g.edges())
        if (interleave(pos[e.u], pos[e.v], pos[a], pos[b])) ++c;
    return c;
}

bool circular_cross(const Graph& g, const CircularDrawing& d, EdgeId e, EdgeId f) {
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    auto pos = cycle_positions(g, d);
    return interleave(pos[a.u], pos[a.v], pos[b.u], pos[b.v]);
}

std::vector<int> circular_crossings_per_edge(const Graph& g, const CircularDrawing& d) {
    auto pos = cycle_positions(g, d);
    const auto& es = g.edges();
    std::vector<int> out(es.size(), 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (interleave(pos[es[i].u], pos[es[i].v], pos[es[j].u], pos[es[j].v])) {
                ++out[i];
                ++out[j];
            }
        }
    }
    return out;
}

bool is_outer_k_planar(const Graph& g, const CircularDrawing& d, int k) {
    try {
        validate_drawing(g, d);
    } catch (const InputError&) {
        return false;
    }
    auto c = circular_crossings_per_edge(g, d);
    return std::all_of(c.begin(), c.end(), [k](int x) { return x <= k; });
}

int layout_bandwidth(const Graph& g, const LinearLayout& layout) {
    validate_layout(g, layout);
    auto pos = positions(layout.order, g.vertex_count());
    int bw = 0;
    for (const auto& e : g.edges()) bw = std::max(bw, std::abs(pos[e.u] - pos[e.v]));
    return bw;
}

}  // namespace localcross
