#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "localcross/drawing.hpp"
#include "localcross/graph.hpp"

namespace localcross {

/// Weighted one-sided instance built from a multiset A. Vertex naming: x_0..x_{n+1} are ids
/// 0..n+1 (fixed in that order), y_mid is n+2 and y_i is n+2+i. Edge ids: e_0, e_1..e_n,
/// e_{n+1}, with weights 1, 2a_1..2a_n, 1.
struct PartitionGadget {
    BipartiteInstance instance;
    Weight k = 0;
};

/// The raw construction for any nonempty positive A (k = Sum(A) + 1).
PartitionGadget build_partition_gadget(const std::vector<std::int64_t>& a);

/// Guarded generator: nullopt when Sum(A) is odd, which is a NO instance of Partition.
std::optional<PartitionGadget> partition_to_weighted_one_sided(const std::vector<std::int64_t>& a);

/// Drawing of the gadget from a subset mask (bit i set: a_{i+1} goes left of y_mid).
TwoLayerDrawing partition_witness(const std::vector<std::int64_t>& a, std::uint64_t left_mask);

/// Tree -> two-sided gadget. X = V(T) keeps its ids 0..n-1. The subdivision vertex of edge e is
/// n+e, and pendant j of vertex v is n+m+v*l+j.
struct TwoSidedBandwidthGadget {
    BipartiteInstance instance;
    int k = 0;
    int pendants = 0;  // l = 2b^2
};

TwoSidedBandwidthGadget bandwidth_tree_to_two_sided(const Graph& tree, int b);

/// Two-layer drawing of the gadget from a layout of T: X follows the layout, pendants are grouped
/// by their neighbour, and each subdivision vertex splits the pendants strictly between its
/// endpoints at the median.
TwoLayerDrawing two_sided_witness_from_layout(const Graph& tree, int b, const LinearLayout& layout);

/// T plus an apex vertex n adjacent to every vertex of T.
Graph tree_to_apex(const Graph& tree);

/// (w, v_1, .., v_n) for the layout (v_1, .., v_n).
CircularDrawing apex_drawing_from_layout(const Graph& tree, const LinearLayout& layout);

/// The cycle read from just after the apex. `drawing` is a drawing of tree_to_apex(tree).
LinearLayout layout_from_outer_drawing(const Graph& tree, const CircularDrawing& drawing);

/// Chain of l-1 cliques of size t, consecutive cliques sharing one vertex. v_{i,j} has id
/// (i-1)(t-1) + (j-1).
struct CliquePath {
    int t = 0;
    int l = 0;
    Graph graph;
    std::vector<Vertex> anchors;
    Vertex middle = 0;
};

CliquePath clique_path(int t, int l);

/// Tree -> outer gadget: one clique path per tree vertex, an apex on all anchors and an edge
/// between the middle vertices for every tree edge. Gadget of tree vertex v occupies ids
/// v*s .. v*s+s-1 (s = gadget size), the apex is n*s.
struct OuterBandwidthGadget {
    Graph graph;
    int k = 0;
    int t = 0;
    int l = 0;
    int gadget_size = 0;
    Vertex apex = 0;
};

/// Parameters and size only, without building the graph.
OuterBandwidthGadget outer_gadget_parameters(int tree_vertices, int b);

OuterBandwidthGadget bandwidth_tree_to_outer(const Graph& tree, int b);

/// Cyclic order (w, CP_{v_1}, .., CP_{v_n}) with each clique path in its natural order.
CircularDrawing outer_witness_from_layout(const Graph& tree, int b, const LinearLayout& layout);

}  // namespace localcross
