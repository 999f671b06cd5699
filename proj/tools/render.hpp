#pragma once

#include <string>

#include "localcross/io.hpp"

namespace localcross::cli {

/// Cosmetic layout constants for exported drawings.
struct RenderConfig {
    double radius = 200.0;
    double margin = 40.0;
    double row_gap = 180.0;
    double column_gap = 40.0;
    double vertex_radius = 10.0;
};

/// Deterministic SVG of a verified certificate. Crossing points are drawn as
/// <circle class="crossing">, one per crossing pair.
std::string render_svg(const Certificate& cert, const InstanceFile& inst, const RenderConfig& cfg = {});

/// Graphviz source with fixed node positions (neato -n) and per-edge crossing labels.
std::string render_dot(const Certificate& cert, const InstanceFile& inst, const RenderConfig& cfg = {});

}  // namespace localcross::cli
