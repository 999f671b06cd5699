#include "localcross/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stack>
#include <string>

#include "localcross/errors.hpp"

namespace localcross {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
    inc_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
}

EdgeId Graph::add_edge(Vertex a, Vertex b, Weight w) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
    if (w <= 0) throw InputError("edge weight must be positive");
    if (find_edge(a, b)) {
        throw InputError("parallel edge " + std::to_string(a) + " " + std::to_string(b));
    }
    EdgeId id = edge_count();
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    weights_.push_back(w);
    auto insert_sorted = [&](Vertex x, Vertex y) {
        auto& nb = adj_[x];
        auto pos = std::lower_bound(nb.begin(), nb.end(), y);
        auto off = pos - nb.begin();
        nb.insert(pos, y);
        inc_[x].insert(inc_[x].begin() + off, id);
    };
    insert_sorted(a, b);
    insert_sorted(b, a);
    return id;
}

const Edge& Graph::edge(EdgeId e) const {
    if (e < 0 || e >= edge_count()) throw InputError("unknown edge id " + std::to_string(e));
    return edges_[e];
}

Weight Graph::weight(EdgeId e) const {
    edge(e);
    return weights_[e];
}

bool Graph::is_weighted() const {
    return std::any_of(weights_.begin(), weights_.end(), [](Weight w) { return w != 1; });
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) return std::nullopt;
    const auto& nb = adj_[a];
    auto pos = std::lower_bound(nb.begin(), nb.end(), b);
    if (pos == nb.end() || *pos != b) return std::nullopt;
    return inc_[a][pos - nb.begin()];
}

EdgeId Graph::edge_id(Vertex a, Vertex b) const {
    auto e = find_edge(a, b);
    if (!e) throw InputError("no edge " + std::to_string(a) + " " + std::to_string(b));
    return *e;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

const std::vector<EdgeId>& Graph::incident(Vertex v) const {
    check_vertex(v);
    return inc_[v];
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && weights_ == other.weights_;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
    InducedSubgraph out;
    out.to_original = keep;
    std::sort(out.to_original.begin(), out.to_original.end());
    out.to_original.erase(std::unique(out.to_original.begin(), out.to_original.end()),
                          out.to_original.end());
    out.from_original.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.to_original.size(); ++i) {
        Vertex v = out.to_original[i];
        if (v < 0 || v >= g.vertex_count()) throw InputError("vertex out of range");
        out.from_original[v] = static_cast<Vertex>(i);
    }
    out.graph = Graph(static_cast<int>(out.to_original.size()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        Vertex a = out.from_original[ed.u];
        Vertex b = out.from_original[ed.v];
        if (a >= 0 && b >= 0) out.graph.add_edge(a, b, g.weight(e));
    }
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> st{s};
        comp[s] = id;
        while (!st.empty()) {
            Vertex x = st.back();
            st.pop_back();
            out[id].push_back(x);
            for (Vertex y : g.neighbors(x)) {
                if (comp[y] < 0) {
                    comp[y] = id;
                    st.push_back(y);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<std::vector<Vertex>> biconnected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> blocks;
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            blocks.push_back({root});
            continue;
        }
        std::stack<Frame> st;
        disc[root] = low[root] = timer++;
        st.push({root, -1, 0});
        while (!st.empty()) {
            auto& f = st.top();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                Vertex w = nb[f.next++];
                if (disc[w] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    st.push({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Vertex v = f.v;
                Vertex p = f.parent;
                st.pop();
                if (p < 0) continue;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    std::vector<Vertex> block;
                    while (true) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(a);
                        block.push_back(b);
                        if (a == p && b == v) break;
                    }
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        if (a.front() != b.front()) return a.front() < b.front();
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return blocks;
}

bool is_biconnected(const Graph& g) {
    if (g.vertex_count() < 2) return false;
    auto blocks = biconnected_components(g);
    return blocks.size() == 1 && static_cast<int>(blocks[0].size()) == g.vertex_count();
}

bool is_forest(const Graph& g) {
    return g.edge_count() + static_cast<int>(connected_components(g).size()) == g.vertex_count();
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (Vertex y : g.neighbors(x)) {
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    q.push(y);
                } else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool density_guard(const Graph& g, int k) {
    long long n = g.vertex_count();
    long long m = g.edge_count();
    if (k < 0) throw InputError("k must be nonnegative");
    if (k == 0) return n < 2 ? m == 0 : m <= 2 * n - 3;
    auto bound = static_cast<long long>(std::floor(4.1 * std::sqrt(static_cast<double>(k)) *
                                                   static_cast<double>(n)));
    return m <= bound;
}

int vertex_disjoint_paths(const Graph& g, Vertex u, Vertex v) {
    int n = g.vertex_count();
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw InputError("bad terminal pair");
    // Split every vertex x into x_in = 2x, x_out = 2x+1; terminals have unbounded capacity.
    int N = 2 * n;
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(N));
    auto add = [&](int a, int b, int c) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, c});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    };
    const int inf = n + 1;
    for (Vertex x = 0; x < n; ++x) add(2 * x, 2 * x + 1, (x == u || x == v) ? inf : 1);
    bool direct = false;
    for (const auto& e : g.edges()) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            direct = true;
            continue;
        }
        add(2 * e.u + 1, 2 * e.v, 1);
        add(2 * e.v + 1, 2 * e.u, 1);
    }
    int s = 2 * u + 1, t = 2 * v;
    int flow = 0;
    while (true) {
        std::vector<int> pred(static_cast<std::size_t>(N), -1);
        std::queue<int> q;
        q.push(s);
        pred[s] = -2;
        while (!q.empty() && pred[t] == -1) {
            int x = q.front();
            q.pop();
            for (int a : out[x]) {
                if (arcs[a].cap > 0 && pred[arcs[a].to] == -1) {
                    pred[arcs[a].to] = a;
                    q.push(arcs[a].to);
                }
            }
        }
        if (pred[t] == -1) break;
        for (int x = t; x != s;) {
            int a = pred[x];
            arcs[a].cap -= 1;
            arcs[a ^ 1].cap += 1;
            x = arcs[a ^ 1].to;
        }
        ++flow;
    }
    return flow + (direct ? 1 : 0);
}

}  // namespace localcross
