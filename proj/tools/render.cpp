#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "localcross/crossings.hpp"
#include "localcross/errors.hpp"

namespace localcross::cli {

namespace {

struct Point {
    double x = 0;
    double y = 0;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

struct Scene {
    double width = 0;
    double height = 0;
    std::vector<Point> at;  // by vertex id
    std::vector<char> placed;
    std::vector<int> crossings;  // by edge id
    std::vector<std::pair<EdgeId, EdgeId>> crossing_pairs;
};

Scene build_scene(const Certificate& cert, const InstanceFile& inst, const RenderConfig& cfg) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    Scene s;
    s.at.assign(static_cast<std::size_t>(n), {});
    s.placed.assign(static_cast<std::size_t>(n), 0);
    if (cert.circular) {
        const auto& cyc = cert.circular->cycle;
        const double pi = std::acos(-1.0);
        const double c = cfg.radius + cfg.margin;
        s.width = s.height = 2 * c;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            double a = 2 * pi * static_cast<double>(i) / static_cast<double>(cyc.size()) - pi / 2;
            s.at[cyc[i]] = {c + cfg.radius * std::cos(a), c + cfg.radius * std::sin(a)};
            s.placed[cyc[i]] = 1;
        }
        s.crossings = circular_crossings_per_edge(g, *cert.circular);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (EdgeId f = e + 1; f < g.edge_count(); ++f)
                if (circular_cross(g, *cert.circular, e, f)) s.crossing_pairs.emplace_back(e, f);
    } else if (cert.two_layer) {
        const auto& d = *cert.two_layer;
        auto bip = to_bipartite(inst);
        std::size_t cols = std::max(d.x_order.size(), d.y_order.size());
        s.width = 2 * cfg.margin + cfg.column_gap * static_cast<double>(cols > 0 ? cols - 1 : 0);
        s.height = 2 * cfg.margin + cfg.row_gap;
        for (std::size_t i = 0; i < d.x_order.size(); ++i) {
            s.at[d.x_order[i]] = {cfg.margin + cfg.column_gap * static_cast<double>(i), cfg.margin};
            s.placed[d.x_order[i]] = 1;
        }
        for (std::size_t i = 0; i < d.y_order.size(); ++i) {
            s.at[d.y_order[i]] = {cfg.margin + cfg.column_gap * static_cast<double>(i),
                                  cfg.margin + cfg.row_gap};
            s.placed[d.y_order[i]] = 1;
        }
        s.crossings = two_layer_crossings_per_edge(bip, d);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (EdgeId f = e + 1; f < g.edge_count(); ++f)
                if (two_layer_cross(bip, d, e, f)) s.crossing_pairs.emplace_back(e, f);
    } else {
        throw InputError("certificate carries no drawing");
    }
    for (Vertex v = 0; v < n; ++v)
        if (!s.placed[v]) throw InputError("certificate does not place vertex " + std::to_string(v));
    return s;
}

Point intersection(Point a, Point b, Point c, Point d) {
    double den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    if (std::abs(den) < 1e-12) return {(a.x + b.x) / 2, (a.y + b.y) / 2};
    double t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / den;
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

}  // namespace

std::string render_svg(const Certificate& cert, const InstanceFile& inst, const RenderConfig& cfg) {
    const Graph& g = inst.graph;
    Scene s = build_scene(cert, inst, cfg);
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(s.width) << "\" height=\""
      << num(s.height) << "\" viewBox=\"0 0 " << num(s.width) << ' ' << num(s.height) << "\">\n";
    o << "<g class=\"edges\" stroke=\"#333\" stroke-width=\"1.5\">\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Point a = s.at[g.edge(e).u], b = s.at[g.edge(e).v];
        o << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
          << "\" y2=\"" << num(b.y) << "\"/>\n";
    }
    o << "</g>\n<g class=\"edge-labels\" font-size=\"10\" fill=\"#06c\">\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Point a = s.at[g.edge(e).u], b = s.at[g.edge(e).v];
        o << "<text x=\"" << num((a.x + b.x) / 2) << "\" y=\"" << num((a.y + b.y) / 2 - 3) << "\">"
          << s.crossings[e] << "</text>\n";
    }
    o << "</g>\n<g class=\"crossings\" fill=\"#c00\">\n";
    for (auto [e, f] : s.crossing_pairs) {
        Point p = intersection(s.at[g.edge(e).u], s.at[g.edge(e).v], s.at[g.edge(f).u],
                               s.at[g.edge(f).v]);
        o << "<circle class=\"crossing\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
          << "\" r=\"3\"/>\n";
    }
    o << "</g>\n<g class=\"vertices\" font-size=\"10\" text-anchor=\"middle\">\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Point p = s.at[v];
        o << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\""
          << num(cfg.vertex_radius) << "\" fill=\"white\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num(p.x) << "\" y=\"" << num(p.y + 3.5) << "\">" << v << "</text>\n";
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

std::string render_dot(const Certificate& cert, const InstanceFile& inst, const RenderConfig& cfg) {
    const Graph& g = inst.graph;
    Scene s = build_scene(cert, inst, cfg);
    std::ostringstream o;
    o << "graph localcross {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        o << "  " << v << " [pos=\"" << num(s.at[v].x) << ',' << num(s.height - s.at[v].y)
          << "!\"];\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        o << "  " << g.edge(e).u << " -- " << g.edge(e).v << " [label=\"" << s.crossings[e]
          << "\"];\n";
    o << "}\n";
    return o.str();
}

}  // namespace localcross::cli
