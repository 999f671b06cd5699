#pragma once

#include <optional>
#include <vector>

#include "localcross/drawing.hpp"
#include "localcross/one_sided.hpp"

namespace localcross {

/// Connected components of G - N[S], each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components_outside_window(const Graph& g,
                                                           const std::vector<Vertex>& window);

/// True iff every component of G - N[S] has its X vertices entirely left or entirely right of S.
/// Throws InputError if S is not consecutive in the drawing's X order.
bool check_separator_property(const BipartiteInstance& inst, const TwoLayerDrawing& drawing,
                              const std::vector<Vertex>& window);

/// Drawing with both orders free and every edge crossed at most k times, or nullopt.
/// Components are solved independently and placed side by side.
std::optional<TwoLayerDrawing> solve_two_sided(const BipartiteInstance& inst, int k,
                                               const SolverOptions& options = {},
                                               SolveStats* stats = nullptr);

}  // namespace localcross
