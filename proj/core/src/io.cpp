#include "localcross/io.hpp"

#include <cctype>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "localcross/errors.hpp"

namespace localcross {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<long long> parse_ints(std::string_view s, int line_no) {
    std::vector<long long> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok +
                             "'");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<Vertex> to_vertices(const std::vector<long long>& xs) {
    return {xs.begin(), xs.end()};
}

}  // namespace

InstanceFile parse_instance_text(std::string_view text) {
    InstanceFile f;
    bool header = false;
    long long n = 0, m = 0, seen = 0;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (line.starts_with("X:")) {
            if (f.x_side) throw ParseError("duplicate X line");
            f.x_side = to_vertices(parse_ints(line.substr(2), line_no));
        } else if (line.starts_with("order:")) {
            if (f.x_order) throw ParseError("duplicate order line");
            f.x_order = to_vertices(parse_ints(line.substr(6), line_no));
        } else if (!header) {
            auto xs = parse_ints(line, line_no);
            if (xs.size() != 2 || xs[0] < 0 || xs[1] < 0)
                throw ParseError("line " + std::to_string(line_no) + ": expected header 'n m'");
            n = xs[0];
            m = xs[1];
            if (n > 10'000'000) throw ParseError("vertex count too large");
            f.graph = Graph(static_cast<int>(n));
            header = true;
        } else {
            auto xs = parse_ints(line, line_no);
            if (xs.size() != 2 && xs.size() != 3)
                throw ParseError("line " + std::to_string(line_no) + ": expected 'u v [w]'");
            if (seen >= m) throw ParseError("more edge lines than declared");
            Weight w = xs.size() == 3 ? xs[2] : 1;
            if (xs[0] < 0 || xs[0] >= n || xs[1] < 0 || xs[1] >= n)
                throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
            try {
                f.graph.add_edge(static_cast<Vertex>(xs[0]), static_cast<Vertex>(xs[1]), w);
            } catch (const InputError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
            ++seen;
        }
        if (end == text.size()) break;
    }
    if (!header) throw ParseError("missing header line 'n m'");
    if (seen != m) throw ParseError("declared " + std::to_string(m) + " edges, found " +
                                    std::to_string(seen));
    return f;
}

std::string to_text(const InstanceFile& f) {
    std::ostringstream out;
    const auto& g = f.graph;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << g.edge(e).u << ' ' << g.edge(e).v;
        if (g.weight(e) != 1) out << ' ' << g.weight(e);
        out << '\n';
    }
    if (f.x_side) {
        out << "X:";
        for (Vertex v : *f.x_side) out << ' ' << v;
        out << '\n';
    }
    if (f.x_order) {
        out << "order:";
        for (Vertex v : *f.x_order) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

InstanceFile parse_instance_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        InstanceFile f;
        int n = j.at("n").get<int>();
        if (n < 0) throw ParseError("negative vertex count");
        f.graph = Graph(n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || (e.size() != 2 && e.size() != 3))
                throw ParseError("edge entries must be [u, v] or [u, v, w]");
            Weight w = e.size() == 3 ? e[2].get<Weight>() : 1;
            f.graph.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>(), w);
        }
        if (j.contains("x_side")) f.x_side = j["x_side"].get<std::vector<Vertex>>();
        if (j.contains("x_order")) f.x_order = j["x_order"].get<std::vector<Vertex>>();
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed instance JSON: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

std::string to_json(const InstanceFile& f) {
    json j;
    const auto& g = f.graph;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        json ed = json::array({g.edge(e).u, g.edge(e).v});
        if (g.weight(e) != 1) ed.push_back(g.weight(e));
        edges.push_back(ed);
    }
    j["edges"] = edges;
    if (f.x_side) j["x_side"] = *f.x_side;
    if (f.x_order) j["x_order"] = *f.x_order;
    return j.dump(2) + "\n";
}

InstanceFile parse_instance(std::string_view text) {
    auto t = trim(text);
    if (!t.empty() && t.front() == '{') return parse_instance_json(text);
    return parse_instance_text(text);
}

InstanceFile read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
    if (!out) throw InputError("write failed for " + path);
}

InstanceFile from_graph(const Graph& g) {
    InstanceFile f;
    f.graph = g;
    return f;
}

InstanceFile from_bipartite(const BipartiteInstance& inst) {
    InstanceFile f;
    f.graph = inst.graph();
    f.x_side = inst.x_side();
    f.x_order = inst.fixed_x_order();
    return f;
}

BipartiteInstance to_bipartite(const InstanceFile& f) {
    if (f.x_side) return BipartiteInstance(f.graph, *f.x_side, f.x_order);
    auto inst = BipartiteInstance::from_coloring(f.graph);
    if (f.x_order) return inst.with_x_order(*f.x_order);
    return inst;
}

std::string instance_digest(const InstanceFile& f) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : to_text(f)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 15U];
        h >>= 4;
    }
    return out;
}

std::string certificate_to_json(const Certificate& c) {
    json j;
    j["problem"] = c.problem;
    j["k"] = c.k;
    j["instance_hash"] = c.instance_hash;
    if (c.mode != WeightMode::Count) j["weight_mode"] = to_string(c.mode);
    if (c.two_layer) {
        j["x_order"] = c.two_layer->x_order;
        j["y_order"] = c.two_layer->y_order;
    }
    if (c.circular) j["cycle"] = c.circular->cycle;
    return j.dump(2) + "\n";
}

Certificate parse_certificate_json(std::string_view text) {
    try {
        json j = json::parse(text);
        Certificate c;
        c.problem = j.at("problem").get<std::string>();
        c.k = j.at("k").get<std::int64_t>();
        c.instance_hash = j.at("instance_hash").get<std::string>();
        if (j.contains("weight_mode")) {
            auto m = j["weight_mode"].get<std::string>();
            if (m == "sum") c.mode = WeightMode::Sum;
            else if (m == "product") c.mode = WeightMode::Product;
            else if (m == "count") c.mode = WeightMode::Count;
            else throw ParseError("unknown weight_mode " + m);
        }
        if (j.contains("x_order") || j.contains("y_order")) {
            c.two_layer = TwoLayerDrawing{j.at("x_order").get<std::vector<Vertex>>(),
                                          j.at("y_order").get<std::vector<Vertex>>()};
        }
        if (j.contains("cycle")) c.circular = CircularDrawing{j["cycle"].get<std::vector<Vertex>>()};
        if (!c.two_layer && !c.circular) throw ParseError("certificate carries no drawing");
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace localcross
