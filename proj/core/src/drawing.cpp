#include "localcross/drawing.hpp"

#include <algorithm>
#include <string>

#include "localcross/errors.hpp"

namespace localcross {

namespace {

void check_permutation(const std::vector<Vertex>& seq, const std::vector<Vertex>& of,
                       const char* what) {
    auto a = seq;
    std::sort(a.begin(), a.end());
    if (a != of) throw InputError(std::string(what) + " is not a permutation of its vertex set");
}

}  // namespace

BipartiteInstance::BipartiteInstance(Graph g, std::vector<Vertex> x_side,
                                     std::optional<std::vector<Vertex>> fixed_x_order)
    : graph_(std::move(g)), x_side_(std::move(x_side)), fixed_x_order_(std::move(fixed_x_order)) {
    int n = graph_.vertex_count();
    std::sort(x_side_.begin(), x_side_.end());
    if (std::adjacent_find(x_side_.begin(), x_side_.end()) != x_side_.end())
        throw InputError("duplicate vertex in X side");
    is_x_.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v : x_side_) {
        if (v < 0 || v >= n) throw InputError("X vertex out of range");
        is_x_[v] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
        if (!is_x_[v]) y_side_.push_back(v);
    for (const auto& e : graph_.edges()) {
        if (is_x_[e.u] == is_x_[e.v]) {
            throw InputError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                             " does not cross the bipartition");
        }
    }
    if (fixed_x_order_) check_permutation(*fixed_x_order_, x_side_, "fixed X order");
}

BipartiteInstance BipartiteInstance::from_coloring(Graph g) {
    auto col = two_coloring(g);
    if (!col) throw InputError("graph is not bipartite");
    std::vector<Vertex> xs;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if ((*col)[v] == 0) xs.push_back(v);
    return BipartiteInstance(std::move(g), std::move(xs));
}

BipartiteInstance BipartiteInstance::with_x_order(std::vector<Vertex> order) const {
    return BipartiteInstance(graph_, x_side_, std::move(order));
}

BipartiteInstance BipartiteInstance::without_x_order() const {
    return BipartiteInstance(graph_, x_side_);
}

BipartiteInstance BipartiteInstance::swapped() const { return BipartiteInstance(graph_, y_side_); }

Vertex BipartiteInstance::x_end(EdgeId e) const {
    const auto& ed = graph_.edge(e);
    return is_x_[ed.u] ? ed.u : ed.v;
}

Vertex BipartiteInstance::y_end(EdgeId e) const {
    const auto& ed = graph_.edge(e);
    return is_x_[ed.u] ? ed.v : ed.u;
}

CircularDrawing CircularDrawing::canonical() const {
    std::size_t n = cycle.size();
    if (n <= 2) {
        auto c = cycle;
        std::sort(c.begin(), c.end());
        return {c};
    }
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::size_t s = static_cast<std::size_t>(it - cycle.begin());
    std::vector<Vertex> fwd(n), bwd(n);
    for (std::size_t i = 0; i < n; ++i) {
        fwd[i] = cycle[(s + i) % n];
        bwd[i] = cycle[(s + n - i) % n];
    }
    return {std::min(fwd, bwd)};
}

void validate_drawing(const BipartiteInstance& inst, const TwoLayerDrawing& d) {
    check_permutation(d.x_order, inst.x_side(), "x_order");
    check_permutation(d.y_order, inst.y_side(), "y_order");
}

void validate_drawing(const Graph& g, const CircularDrawing& d) {
    std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    check_permutation(d.cycle, all, "cycle");
}

void validate_layout(const Graph& g, const LinearLayout& layout) {
    std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
    check_permutation(layout.order, all, "layout");
}

std::vector<int> positions(const std::vector<Vertex>& order, int n) {
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        if (v < 0 || v >= n) throw InputError("vertex out of range in order");
        pos[v] = static_cast<int>(i);
    }
    return pos;
}

}  // namespace localcross
