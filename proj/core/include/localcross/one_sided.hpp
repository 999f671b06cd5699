#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "localcross/crossings.hpp"
#include "localcross/drawing.hpp"
#include "localcross/options.hpp"

namespace localcross {

struct DegreeReducedInstance {
    BipartiteInstance instance;
    std::vector<Vertex> to_original;  // reduced id -> input id
    /// (leaf, anchor) in input ids, in removal order.
    std::vector<std::pair<Vertex, Vertex>> removed_leaves;
};

/// Returns nullopt (NO) if some vertex has more than 2k+2 non-leaf neighbours. Otherwise deletes
/// leaf neighbours of vertices on `side` with degree above 2k+2 until none is left. A fixed X
/// order is carried over.
std::optional<DegreeReducedInstance> reduce_degrees(const BipartiteInstance& inst, int k,
                                                    Side side);

/// Reinserts removed leaves into a drawing of the reduced graph (given in input ids), last removed
/// first, each immediately left of the (k+2)-th neighbour of its anchor.
TwoLayerDrawing reinsert_leaves(const BipartiteInstance& original, TwoLayerDrawing drawing,
                                const std::vector<std::pair<Vertex, Vertex>>& removed, int k);

/// Smallest l with |delta({x_i..x_{i+l}})| >= 2k+1 (0-based i into the fixed X order), capped at
/// |X|-1-i when the tail carries too few edges.
int dynamic_window(const BipartiteInstance& inst, int k, int i);

/// Drawing respecting the fixed X order with every edge crossed at most k times, or nullopt.
std::optional<TwoLayerDrawing> solve_one_sided(const BipartiteInstance& inst, int k,
                                               const SolverOptions& options = {},
                                               SolveStats* stats = nullptr);

/// Weighted variant: every edge's load under `mode` must be at most k. Degree reduction is off.
std::optional<TwoLayerDrawing> solve_one_sided_weighted(const BipartiteInstance& inst, Weight k,
                                                        WeightMode mode,
                                                        const SolverOptions& options = {},
                                                        SolveStats* stats = nullptr);

}  // namespace localcross
