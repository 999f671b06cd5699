#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "localcross/crossings.hpp"
#include "localcross/drawing.hpp"
#include "localcross/graph.hpp"

namespace localcross {

/// Parsed instance file: a graph plus the optional bipartite annotations.
///
/// Text format:
///   n m
///   u v [w]        (m lines)
///   X: x1 x2 ...   (optional)
///   order: ...     (optional fixed X order)
/// Blank lines and lines starting with '#' are ignored.
struct InstanceFile {
    Graph graph;
    std::optional<std::vector<Vertex>> x_side;
    std::optional<std::vector<Vertex>> x_order;
};

InstanceFile parse_instance_text(std::string_view text);
/// Canonical text form; weights are written only when different from 1.
std::string to_text(const InstanceFile& f);

InstanceFile parse_instance_json(std::string_view text);
std::string to_json(const InstanceFile& f);

/// Dispatches on the first non-space character ('{' means JSON).
InstanceFile parse_instance(std::string_view text);
InstanceFile read_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

InstanceFile from_graph(const Graph& g);
InstanceFile from_bipartite(const BipartiteInstance& inst);
/// Uses the X line when present, the 2-colouring otherwise.
BipartiteInstance to_bipartite(const InstanceFile& f);

/// FNV-1a 64 of the canonical text form, as 16 lowercase hex digits.
std::string instance_digest(const InstanceFile& f);

struct Certificate {
    std::string problem;  // "one-sided", "two-sided" or "outer"
    std::int64_t k = 0;
    std::string instance_hash;
    WeightMode mode = WeightMode::Count;
    std::optional<TwoLayerDrawing> two_layer;
    std::optional<CircularDrawing> circular;
};

std::string certificate_to_json(const Certificate& c);
Certificate parse_certificate_json(std::string_view text);

}  // namespace localcross
