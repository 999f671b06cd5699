#pragma once

#include <optional>

#include "localcross/crossings.hpp"
#include "localcross/drawing.hpp"

namespace localcross {

/// Enumeration caps for the exhaustive reference solvers.
struct OracleLimits {
    int max_y = 9;                       // one-sided: |Y|
    double max_two_sided_orders = 1e9;   // two-sided: |X|! * |Y|!
    int max_outer_n = 9;                 // outer: n
    int max_bandwidth_n = 10;            // bandwidth: n
};

/// Lexicographically first y_order (in vertex ids) meeting the budget, or nullopt.
/// Requires a fixed X order. Throws ResourceError above the cap.
std::optional<TwoLayerDrawing> oracle_one_sided(const BipartiteInstance& inst, Weight k,
                                                WeightMode mode = WeightMode::Count,
                                                const OracleLimits& limits = {});

/// Exhaustive over both orders with the first X vertex smaller than the last.
std::optional<TwoLayerDrawing> oracle_two_sided(const BipartiteInstance& inst, int k,
                                                const OracleLimits& limits = {});

/// Lexicographically first canonical cycle that is outer k-planar, or nullopt.
std::optional<CircularDrawing> oracle_outer(const Graph& g, int k, const OracleLimits& limits = {});

struct BandwidthResult {
    int bandwidth = 0;
    LinearLayout layout;
};

/// Exact bandwidth by branch and bound; the layout is lexicographically first among optimal ones.
BandwidthResult oracle_bandwidth(const Graph& g, const OracleLimits& limits = {});

/// Smallest k <= k_max with an outer k-planar drawing, or nullopt.
std::optional<int> oracle_local_outer_crossing_number(const Graph& g, int k_max,
                                                      const OracleLimits& limits = {});

}  // namespace localcross
