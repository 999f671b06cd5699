#pragma once

// Exhaustive graph catalogs and independent structural predicates used by the test suites.

#include <vector>

#include "localcross/drawing.hpp"
#include "localcross/graph.hpp"

namespace lctest {

using localcross::BipartiteInstance;
using localcross::Graph;

/// Pairwise non-isomorphic connected graphs on exactly n vertices (n <= 8).
std::vector<Graph> connected_graphs(int n);

/// Pairwise non-isomorphic trees on exactly n vertices.
std::vector<Graph> trees(int n);

/// Connected bipartite graphs with X = 0..a-1 and Y = a..a+b-1, one per class under independent
/// relabelling of X and of Y.
std::vector<BipartiteInstance> connected_bipartite(int a, int b);

/// Tree whose non-leaf vertices induce a path (checked by stripping leaves).
bool is_caterpillar(const Graph& tree);

/// Exhaustive minor test: a partition of a vertex subset into |V(h)| connected branch sets with
/// an edge between the sets of every edge of h.
bool has_minor(const Graph& g, const Graph& h);

/// No K4 and no K_{2,3} minor.
bool outerplanar_by_minors(const Graph& g);

/// Subset-sum split of `a` into two halves of equal sum.
bool partition_exists(const std::vector<long long>& a);

}  // namespace lctest
