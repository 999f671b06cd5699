#include "localcross/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "localcross/errors.hpp"

namespace localcross {

namespace {

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Depth-first search over y orders for a fixed x order. Placing y fixes the load of every edge
// at y: already placed y's are to its left and the rest to its right.
class OneSidedSearch {
public:
    OneSidedSearch(const BipartiteInstance& inst, const std::vector<Vertex>& x_order, Weight k,
                   WeightMode mode)
        : inst_(inst), g_(inst.graph()), k_(k), mode_(mode) {
        px_ = positions(x_order, g_.vertex_count());
        placed_.assign(static_cast<std::size_t>(g_.vertex_count()), 0);
    }

    std::optional<std::vector<Vertex>> run() {
        order_.clear();
        if (dfs()) return order_;
        return std::nullopt;
    }

private:
    bool fits(Vertex y) const {
        for (EdgeId e : g_.incident(y)) {
            Vertex x = inst_.x_end(e);
            Weight load = 0;
            for (EdgeId f = 0; f < g_.edge_count(); ++f) {
                Vertex fx = inst_.x_end(f), fy = inst_.y_end(f);
                if (fx == x || fy == y) continue;
                bool cross = placed_[fy] ? px_[fx] > px_[x] : px_[fx] < px_[x];
                if (!cross) continue;
                switch (mode_) {
                    case WeightMode::Count: load += 1; break;
                    case WeightMode::Sum: load += g_.weight(f); break;
                    case WeightMode::Product: load += g_.weight(e) * g_.weight(f); break;
                }
                if (load > k_) return false;
            }
        }
        return true;
    }

    bool dfs() {
        if (order_.size() == inst_.y_side().size()) return true;
        for (Vertex y : inst_.y_side()) {
            if (placed_[y]) continue;
            if (!fits(y)) continue;
            placed_[y] = 1;
            order_.push_back(y);
            if (dfs()) return true;
            order_.pop_back();
            placed_[y] = 0;
        }
        return false;
    }

    const BipartiteInstance& inst_;
    const Graph& g_;
    Weight k_;
    WeightMode mode_;
    std::vector<int> px_;
    std::vector<char> placed_;
    std::vector<Vertex> order_;
};

}  // namespace

std::optional<TwoLayerDrawing> oracle_one_sided(const BipartiteInstance& inst, Weight k,
                                                WeightMode mode, const OracleLimits& limits) {
    if (!inst.fixed_x_order()) throw InputError("one-sided oracle needs a fixed X order");
    if (k < 0) throw InputError("k must be nonnegative");
    if (static_cast<int>(inst.y_side().size()) > limits.max_y)
        throw ResourceError("one-sided oracle: |Y| exceeds cap");
    const auto& xo = *inst.fixed_x_order();
    OneSidedSearch search(inst, xo, k, mode);
    auto ys = search.run();
    if (!ys) return std::nullopt;
    return TwoLayerDrawing{xo, *ys};
}

std::optional<TwoLayerDrawing> oracle_two_sided(const BipartiteInstance& inst, int k,
                                                const OracleLimits& limits) {
    if (k < 0) throw InputError("k must be nonnegative");
    int nx = static_cast<int>(inst.x_side().size());
    int ny = static_cast<int>(inst.y_side().size());
    if (factorial(nx) * factorial(ny) > limits.max_two_sided_orders)
        throw ResourceError("two-sided oracle: |X|!*|Y|! exceeds cap");
    std::vector<Vertex> xo = inst.x_side();
    do {
        if (nx >= 2 && xo.front() > xo.back()) continue;
        OneSidedSearch search(inst, xo, k, WeightMode::Count);
        if (auto ys = search.run()) return TwoLayerDrawing{xo, *ys};
    } while (std::next_permutation(xo.begin(), xo.end()));
    return std::nullopt;
}

namespace {

// Vertex 0 sits at position 0; positions are filled left to right. Unplaced vertices lie beyond
// every placed one, so an edge's crossing count is final once both its endpoints are placed.
class OuterSearch {
public:
    OuterSearch(const Graph& g, int k) : g_(g), k_(k) {
        pos_.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    }

    std::optional<std::vector<Vertex>> run() {
        int n = g_.vertex_count();
        if (n == 0) return std::vector<Vertex>{};
        cycle_.assign(1, 0);
        pos_[0] = 0;
        if (!edges_ok(0)) return std::nullopt;
        if (dfs()) return cycle_;
        return std::nullopt;
    }

private:
    int crossings(const Edge& e) const {
        int a = std::min(pos_[e.u], pos_[e.v]), b = std::max(pos_[e.u], pos_[e.v]);
        auto inside = [&](Vertex x) {
            int p = pos_[x];
            return p > a && p < b;
        };
        int c = 0;
        for (const auto& f : g_.edges()) {
            if (f.shares_endpoint(e)) continue;
            if (inside(f.u) != inside(f.v)) ++c;
        }
        return c;
    }

    bool edges_ok(Vertex v) const {
        for (Vertex u : g_.neighbors(v)) {
            if (pos_[u] < 0) continue;
            if (crossings(Edge{std::min(u, v), std::max(u, v)}) > k_) return false;
        }
        return true;
    }

    bool dfs() {
        int n = g_.vertex_count();
        int p = static_cast<int>(cycle_.size());
        if (p == n) return n < 3 || cycle_[1] < cycle_[n - 1];
        for (Vertex v = 1; v < n; ++v) {
            if (pos_[v] >= 0) continue;
            pos_[v] = p;
            cycle_.push_back(v);
            if (edges_ok(v) && dfs()) return true;
            cycle_.pop_back();
            pos_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> pos_;
    std::vector<Vertex> cycle_;
};

}  // namespace

std::optional<CircularDrawing> oracle_outer(const Graph& g, int k, const OracleLimits& limits) {
    if (k < 0) throw InputError("k must be nonnegative");
    if (g.vertex_count() > limits.max_outer_n) throw ResourceError("outer oracle: n exceeds cap");
    OuterSearch search(g, k);
    auto cyc = search.run();
    if (!cyc) return std::nullopt;
    return CircularDrawing{*cyc};
}

namespace {

class BandwidthSearch {
public:
    BandwidthSearch(const Graph& g, int b) : g_(g), b_(b) {
        pos_.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    }

    std::optional<std::vector<Vertex>> run() {
        if (dfs()) return order_;
        return std::nullopt;
    }

private:
    bool dfs() {
        int n = g_.vertex_count();
        int p = static_cast<int>(order_.size());
        if (p == n) return true;
        // Every placed vertex with unplaced neighbours needs room for them within distance b.
        for (Vertex u : order_) {
            int pending = 0;
            for (Vertex w : g_.neighbors(u))
                if (pos_[w] < 0) ++pending;
            if (pending > 0 && p + pending - 1 > pos_[u] + b_) return false;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (pos_[v] >= 0) continue;
            bool ok = true;
            for (Vertex w : g_.neighbors(v)) {
                if (pos_[w] >= 0 && p - pos_[w] > b_) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pos_[v] = p;
            order_.push_back(v);
            if (dfs()) return true;
            order_.pop_back();
            pos_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    int b_;
    std::vector<int> pos_;
    std::vector<Vertex> order_;
};

}  // namespace

BandwidthResult oracle_bandwidth(const Graph& g, const OracleLimits& limits) {
    int n = g.vertex_count();
    if (n > limits.max_bandwidth_n) throw ResourceError("bandwidth oracle: n exceeds cap");
    BandwidthResult res;
    if (g.edge_count() == 0) {
        res.layout.order.resize(static_cast<std::size_t>(n));
        std::iota(res.layout.order.begin(), res.layout.order.end(), 0);
        return res;
    }
    int maxdeg = 0;
    for (Vertex v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
    for (int b = std::max(1, (maxdeg + 1) / 2); b < n; ++b) {
        BandwidthSearch search(g, b);
        if (auto order = search.run()) {
            res.bandwidth = b;
            res.layout.order = *order;
            return res;
        }
    }
    throw InvariantError("bandwidth search exhausted without a layout");
}

std::optional<int> oracle_local_outer_crossing_number(const Graph& g, int k_max,
                                                      const OracleLimits& limits) {
    for (int k = 0; k <= k_max; ++k)
        if (oracle_outer(g, k, limits)) return k;
    return std::nullopt;
}

}  // namespace localcross
