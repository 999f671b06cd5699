#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "localcross/vertex_set.hpp"

namespace localcross {

using Vertex = int;
using EdgeId = int;
using Weight = std::int64_t;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool has(Vertex x) const { return x == u || x == v; }
    bool shares_endpoint(const Edge& e) const { return has(e.u) || has(e.v); }
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with positive integer edge weights.
/// Edge ids are assigned in insertion order.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Adds {a,b}; rejects loops, duplicates, out-of-range ids and non-positive weights.
    EdgeId add_edge(Vertex a, Vertex b, Weight w = 1);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const;
    Weight weight(EdgeId e) const;
    const std::vector<Weight>& weights() const { return weights_; }
    bool is_weighted() const;

    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
    /// Like find_edge but throws InputError for non-edges.
    EdgeId edge_id(Vertex a, Vertex b) const;
    bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

    /// Neighbors in ascending order.
    const std::vector<Vertex>& neighbors(Vertex v) const;
    /// Incident edge ids, ordered by neighbor id.
    const std::vector<EdgeId>& incident(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool operator==(const Graph& other) const;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Weight> weights_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> inc_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;    // new id -> old id
    std::vector<Vertex> from_original;  // old id -> new id or -1
};

/// Subgraph induced by `keep`, renumbered in ascending original id order. Weights are kept.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);

/// Connected components, each sorted; components ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Blocks (maximal biconnected subgraphs). Bridges are 2-vertex blocks and isolated vertices
/// singleton blocks. Each block is sorted; blocks are ordered by (smallest vertex, size).
std::vector<std::vector<Vertex>> biconnected_components(const Graph& g);
bool is_biconnected(const Graph& g);

bool is_tree(const Graph& g);
bool is_forest(const Graph& g);

/// Proper 2-colouring (0/1 per vertex, smallest vertex of each component gets 0), or nullopt.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// Quick necessary condition for outer k-planarity: m <= 2n-3 for k=0, m <= floor(4.1*sqrt(k)*n) otherwise.
bool density_guard(const Graph& g, int k);

/// Maximum number of internally vertex-disjoint u-v paths (unit vertex capacities).
/// An edge uv counts as one path.
int vertex_disjoint_paths(const Graph& g, Vertex u, Vertex v);

}  // namespace localcross
