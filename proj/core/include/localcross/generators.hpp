#pragma once

#include <cstdint>
#include <random>

#include "localcross/drawing.hpp"
#include "localcross/graph.hpp"

namespace localcross {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// X = 0..a-1, Y = a..a+b-1.
BipartiteInstance complete_bipartite(int a, int b);
/// Spine 0..spine-1 as a path; every spine vertex gets `legs` pendant leaves.
Graph caterpillar(int spine, int legs);

/// Draws values with `rng() % bound` so sequences are identical across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform labelled tree via a random Pruefer sequence.
Graph random_tree(int n, std::mt19937_64& rng);
/// Random tree plus `extra` random chords (fewer if the graph saturates).
Graph random_connected(int n, int extra, std::mt19937_64& rng);
/// X = 0..nx-1, Y = nx..nx+ny-1, each of the nx*ny pairs present with probability p.
BipartiteInstance random_bipartite(int nx, int ny, double p, std::mt19937_64& rng);
/// Connected random bipartite graph: random spanning tree across the sides plus extra edges.
BipartiteInstance random_connected_bipartite(int nx, int ny, int extra, std::mt19937_64& rng);

}  // namespace localcross
