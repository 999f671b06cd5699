#pragma once

// Certificate checks shared by the unit tests and the acceptance binary.

#include <optional>
#include <random>

#include "localcross/crossings.hpp"
#include "localcross/drawing.hpp"

namespace lctest {

using namespace localcross;

/// Far-edge property: with isolated X vertices ignored, edges at x_p and x_q with q > p + 2k never
/// cross (their Y endpoints satisfy y <= y').
bool far_edge_property(const BipartiteInstance& inst, const TwoLayerDrawing& d, int k);

/// Per-edge loads recomputed from raw positions, sharing no code with the library counters.
std::vector<Weight> naive_two_layer_loads(const BipartiteInstance& inst, const TwoLayerDrawing& d,
                                          WeightMode mode = WeightMode::Count);
std::vector<int> naive_circular_crossings(const Graph& g, const CircularDrawing& d);

/// Independent certificate checks: orders are permutations of the right vertex sets, the fixed
/// X order (if any) is respected and every load is at most k.
bool certificate_ok(const BipartiteInstance& inst, const TwoLayerDrawing& d, Weight k,
                    WeightMode mode = WeightMode::Count);
bool certificate_ok(const Graph& g, const CircularDrawing& d, int k);

int max_two_layer_crossing(const BipartiteInstance& inst, const TwoLayerDrawing& d);
int max_circular_crossing(const Graph& g, const CircularDrawing& d);

/// Random fixed X order on a copy of `inst`.
BipartiteInstance with_random_order(const BipartiteInstance& inst, std::mt19937_64& rng);

/// Graph with edge `drop` removed (ids above shift down by one).
Graph without_edge(const Graph& g, EdgeId drop);

}  // namespace lctest
