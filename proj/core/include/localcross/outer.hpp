#pragma once

#include <optional>
#include <vector>

#include "localcross/drawing.hpp"
#include "localcross/options.hpp"
#include "localcross/vertex_set.hpp"

namespace localcross {

/// Every R of V - {u,v} cut from L = V - ({u,v} + R) by at most k edges. Equivalently, all unions
/// of components of G - {u,v} - F over edge sets F with |F| <= k whose cut is at most k.
/// Sorted, no duplicates. Throws InputError unless g is biconnected.
std::vector<VertexSet> enumerate_candidate_Rs(const Graph& g, Vertex u, Vertex v, int k);

/// Edges between R and L = V - ({u,v} + R), ascending ids.
std::vector<EdgeId> cut_edges(const Graph& g, Vertex u, Vertex v, const VertexSet& r);

/// A subproblem (u,v,R,tau,chi): tau orders the cut of R, chi[i] is the budget of tau[i].
struct OuterSubproblem {
    Vertex u = 0;
    Vertex v = 0;
    VertexSet r;
    std::vector<EdgeId> tau;
    std::vector<int> chi;
};

/// Where an edge lands in the triangle frame (u, tau terminals, v, tau2 reversed, w, tau1
/// reversed). Terminal positions are 1-based; 0 means "not in that cut".
struct CutMembership {
    bool is_uv = false;
    int tau = 0;
    int tau1 = 0;
    int tau2 = 0;
    char apex = 0;  // 'u', 'v' or 'w' when the edge touches exactly one of them
};

/// Crossings of every image edge inside the frame with l, l1, l2 terminals.
/// Throws InvariantError for an edge listed in all three cuts.
std::vector<int> triangle_crossings(int l, int l1, int l2, const std::vector<CutMembership>& edges);

struct OuterSplit {
    Vertex w = 0;
    OuterSubproblem left;   // ((u,w), R1, tau1, chi1)
    OuterSubproblem right;  // ((w,v), R2, tau2, chi2)
};

/// All six consistency conditions for splitting `parent` at `split.w`.
bool check_consistency(const Graph& g, int k, const OuterSubproblem& parent,
                       const OuterSplit& split);

/// Rebuilds the augmented drawing (u, t_1..t_l, v, R in `seq` order) and checks outer
/// k-planarity and cross(c_i) <= chi(c_i). `seq` lists {u,v} + R as (v, ..., u).
bool verify_subproblem(const Graph& g, int k, const OuterSubproblem& sub,
                       const std::vector<Vertex>& seq);

/// One node of a reconstructed solution: the subproblem, its split (if R is nonempty) and the
/// vertex sequence (v, ..., u) it produced.
struct OuterTraceNode {
    OuterSubproblem sub;
    std::optional<OuterSplit> split;
    std::vector<Vertex> seq;
};

struct OuterResult {
    CircularDrawing drawing;
    std::vector<OuterTraceNode> nodes;  // root first
};

/// Biconnected input (or at most two vertices). Certificate or nullopt.
std::optional<CircularDrawing> solve_outer_biconnected(const Graph& g, int k,
                                                       const SolverOptions& options = {},
                                                       SolveStats* stats = nullptr);

/// Same, keeping the reconstruction tree for inspection.
std::optional<OuterResult> solve_outer_biconnected_traced(const Graph& g, int k,
                                                          const SolverOptions& options = {},
                                                          SolveStats* stats = nullptr);

/// Any graph: blocks are solved independently and nested at cut vertices.
std::optional<CircularDrawing> solve_outer(const Graph& g, int k, const SolverOptions& options = {},
                                           SolveStats* stats = nullptr);

/// Smallest k <= k_max with solve_outer(g, k) = YES, or nullopt.
std::optional<int> local_outer_crossing_number(const Graph& g, int k_max,
                                               const SolverOptions& options = {});

}  // namespace localcross
