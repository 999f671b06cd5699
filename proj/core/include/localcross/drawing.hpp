#pragma once

#include <optional>
#include <vector>

#include "localcross/graph.hpp"

namespace localcross {

enum class Side { X, Y };

/// Bipartite graph with a fixed side assignment and an optional fixed order of the X side.
class BipartiteInstance {
public:
    BipartiteInstance() = default;
    /// Throws InputError if `x_side` does not induce a valid bipartition or the order is not a
    /// permutation of `x_side`.
    BipartiteInstance(Graph g, std::vector<Vertex> x_side,
                      std::optional<std::vector<Vertex>> fixed_x_order = std::nullopt);

    /// X = colour class 0 of the canonical 2-colouring; throws InputError if not bipartite.
    static BipartiteInstance from_coloring(Graph g);

    const Graph& graph() const { return graph_; }
    const std::vector<Vertex>& x_side() const { return x_side_; }
    const std::vector<Vertex>& y_side() const { return y_side_; }
    const std::vector<Vertex>& side(Side s) const { return s == Side::X ? x_side_ : y_side_; }
    bool is_x(Vertex v) const { return is_x_.at(static_cast<std::size_t>(v)) != 0; }
    const std::optional<std::vector<Vertex>>& fixed_x_order() const { return fixed_x_order_; }

    BipartiteInstance with_x_order(std::vector<Vertex> order) const;
    BipartiteInstance without_x_order() const;
    /// Same graph with the roles of X and Y exchanged (drops the fixed order).
    BipartiteInstance swapped() const;

    /// X endpoint of edge e.
    Vertex x_end(EdgeId e) const;
    Vertex y_end(EdgeId e) const;

private:
    Graph graph_;
    std::vector<Vertex> x_side_;
    std::vector<Vertex> y_side_;
    std::vector<char> is_x_;
    std::optional<std::vector<Vertex>> fixed_x_order_;
};

struct TwoLayerDrawing {
    std::vector<Vertex> x_order;
    std::vector<Vertex> y_order;
    bool operator==(const TwoLayerDrawing&) const = default;
};

/// Cyclic vertex order. Comparisons are on the stored sequence; use canonical() to compare
/// drawings up to rotation and reflection.
struct CircularDrawing {
    std::vector<Vertex> cycle;

    /// Rotation starting at the smallest vertex, in the direction whose second entry is smaller.
    CircularDrawing canonical() const;
    bool operator==(const CircularDrawing&) const = default;
};

struct LinearLayout {
    std::vector<Vertex> order;
    bool operator==(const LinearLayout&) const = default;
};

/// Throws InputError unless the drawing's orders are permutations of the instance's sides.
void validate_drawing(const BipartiteInstance& inst, const TwoLayerDrawing& d);
/// Throws InputError unless `cycle` is a permutation of 0..n-1.
void validate_drawing(const Graph& g, const CircularDrawing& d);
void validate_layout(const Graph& g, const LinearLayout& layout);

/// Inverse permutation: position of every vertex in `order`, -1 for absent vertices.
std::vector<int> positions(const std::vector<Vertex>& order, int n);

}  // namespace localcross
