#pragma once

// Frontier dynamic program shared by the one-sided and two-sided solvers.
//
// X vertices are added one at a time. The frontier holds the suffix of the current Y order that
// can still take part in crossings: an optional barrier vertex (the rightmost Y endpoint of a
// closed X vertex) followed by the Y vertices to its right, plus the load of every edge whose Y
// endpoint lies strictly right of the barrier. New Y vertices may only be inserted after the
// barrier, so edges at or left of it never gain crossings again.

#include <cstdint>
#include <functional>
#include <vector>

#include "localcross/crossings.hpp"
#include "localcross/drawing.hpp"

namespace localcross::detail {

struct LoadEntry {
    EdgeId edge;
    Weight load;
    bool operator==(const LoadEntry&) const = default;
};

struct Frontier {
    bool has_barrier = false;
    std::vector<Vertex> live;
    std::vector<LoadEntry> loads;  // sorted by edge id

    void append_key(std::vector<std::int64_t>& key) const;
};

class FrontierEngine {
public:
    FrontierEngine(const BipartiteInstance& inst, Weight k, WeightMode mode);

    /// Adds X vertex x to `fr`. `processed` marks X vertices added before x. Calls `emit` once per
    /// admissible placement of x's first-seen Y neighbours.
    void expand(const Frontier& fr, Vertex x, const std::vector<char>& processed,
                const std::function<void(Frontier&&)>& emit) const;

    /// Moves the barrier past every Y endpoint of the edges of `closing`. Y vertices left of the
    /// new barrier are appended to `dropped`; fails if one of them still has an unprocessed
    /// neighbour. `processed` includes the vertex just added.
    bool close(Frontier& fr, const std::vector<Vertex>& closing, const std::vector<char>& processed,
               std::vector<Vertex>& dropped) const;

    bool y_done(Vertex y, const std::vector<char>& processed) const;

private:
    Weight term(EdgeId e, EdgeId f) const;

    const BipartiteInstance& inst_;
    const Graph& g_;
    Weight k_;
    WeightMode mode_;
};

struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const;
};

}  // namespace localcross::detail
