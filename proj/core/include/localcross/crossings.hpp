#pragma once

#include <vector>

#include "localcross/drawing.hpp"

namespace localcross {

/// How the per-edge load is accumulated over crossing edges f of e.
///   Count:   +1 per crossing
///   Sum:     +w(f)
///   Product: +w(e)*w(f)
enum class WeightMode { Count, Sum, Product };

const char* to_string(WeightMode m);

// --- two-layer drawings -----------------------------------------------------

/// True iff e and f cross in d: distinct endpoints and opposite relative order on the two layers.
bool two_layer_cross(const BipartiteInstance& inst, const TwoLayerDrawing& d, EdgeId e, EdgeId f);
bool two_layer_cross(const BipartiteInstance& inst, const TwoLayerDrawing& d, const Edge& e,
                     const Edge& f);

/// Number of crossings on every edge, indexed by edge id.
std::vector<int> two_layer_crossings_per_edge(const BipartiteInstance& inst,
                                              const TwoLayerDrawing& d);

/// Weighted load on every edge, indexed by edge id.
std::vector<Weight> two_layer_edge_loads(const BipartiteInstance& inst, const TwoLayerDrawing& d,
                                         WeightMode mode);

/// Validates d and checks every load is <= k.
bool is_two_layer_k_planar(const BipartiteInstance& inst, const TwoLayerDrawing& d, Weight k,
                           WeightMode mode = WeightMode::Count);

// --- circular drawings ------------------------------------------------------

/// True iff the endpoints of e interleave with {a,b} on the cycle.
bool circular_pierce(const Graph& g, const CircularDrawing& d, EdgeId e, Vertex a, Vertex b);
bool circular_pierce(const Graph& g, const CircularDrawing& d, const Edge& e, Vertex a, Vertex b);

/// Number of edges of g piercing {a,b}.
int pierce_count(const Graph& g, const CircularDrawing& d, Vertex a, Vertex b);

bool circular_cross(const Graph& g, const CircularDrawing& d, EdgeId e, EdgeId f);

std::vector<int> circular_crossings_per_edge(const Graph& g, const CircularDrawing& d);

bool is_outer_k_planar(const Graph& g, const CircularDrawing& d, int k);

// --- layouts ----------------------------------------------------------------

/// Maximum stretch |pos(u)-pos(v)| over all edges; 0 without edges.
int layout_bandwidth(const Graph& g, const LinearLayout& layout);

}  // namespace localcross
