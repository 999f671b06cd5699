#include "catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "localcross/generators.hpp"

namespace lctest {

using localcross::Vertex;

namespace {

using Mask = std::uint64_t;

int pair_bit(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    return i * n + j;  // n <= 8 keeps this below 64
}

Mask to_mask(const Graph& g) {
    Mask m = 0;
    int n = g.vertex_count();
    for (const auto& e : g.edges()) m |= Mask{1} << pair_bit(e.u, e.v, n);
    return m;
}

Graph from_mask(Mask m, int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m >> pair_bit(i, j, n) & 1U) g.add_edge(i, j);
    return g;
}

// Canonical mask: minimum over relabellings that list vertices by non-increasing degree.
Mask canonical_mask(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    std::sort(verts.begin(), verts.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    // Blocks of equal degree are permuted independently.
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && g.degree(verts[j]) == g.degree(verts[i])) ++j;
        blocks.emplace_back(i, j);
        std::sort(verts.begin() + i, verts.begin() + j);
        i = j;
    }
    Mask best = ~Mask{0};
    std::function<void(std::size_t)> rec = [&](std::size_t b) {
        if (b == blocks.size()) {
            std::vector<int> label(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) label[verts[i]] = i;
            Mask m = 0;
            for (const auto& e : g.edges()) m |= Mask{1} << pair_bit(label[e.u], label[e.v], n);
            best = std::min(best, m);
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(verts.begin() + lo, verts.begin() + hi);
        do {
            rec(b + 1);
        } while (std::next_permutation(verts.begin() + lo, verts.begin() + hi));
    };
    rec(0);
    return best;
}

std::string ahu(const Graph& t, Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : t.neighbors(v))
        if (w != parent) kids.push_back(ahu(t, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
}

std::vector<Vertex> tree_centers(const Graph& t) {
    int n = t.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : t.neighbors(v))
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string tree_code(const Graph& t) {
    std::string best;
    for (Vertex c : tree_centers(t)) {
        auto s = ahu(t, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
    if (n <= 0) return {};
    if (n == 1) return {Graph(1)};
    std::set<Mask> seen;
    std::vector<Graph> out;
    for (const Graph& h : connected_graphs(n - 1)) {
        for (Mask s = 1; s < (Mask{1} << (n - 1)); ++s) {
            Graph g(n);
            for (const auto& e : h.edges()) g.add_edge(e.u, e.v);
            for (int v = 0; v < n - 1; ++v)
                if (s >> v & 1U) g.add_edge(v, n - 1);
            Mask c = canonical_mask(g);
            if (seen.insert(c).second) out.push_back(from_mask(c, n));
        }
    }
    return out;
}

std::vector<Graph> trees(int n) {
    if (n <= 0) return {};
    if (n == 1) return {Graph(1)};
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (const Graph& t : trees(n - 1)) {
        for (Vertex v = 0; v < n - 1; ++v) {
            Graph g(n);
            for (const auto& e : t.edges()) g.add_edge(e.u, e.v);
            g.add_edge(v, n - 1);
            if (seen.insert(tree_code(g)).second) out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<BipartiteInstance> connected_bipartite(int a, int b) {
    std::vector<BipartiteInstance> out;
    if (a < 1 || b < 1) return out;
    const int bits = a * b;
    std::vector<int> px(static_cast<std::size_t>(a)), py(static_cast<std::size_t>(b));
    std::set<std::uint32_t> seen;
    for (std::uint32_t m = 1; m < (1U << bits); ++m) {
        auto enc = [&](const std::vector<int>& sx, const std::vector<int>& sy) {
            std::uint32_t r = 0;
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j)
                    if (m >> (i * b + j) & 1U) r |= 1U << (sx[i] * b + sy[j]);
            return r;
        };
        // Connectivity on the raw mask first; canonicalisation is the expensive part.
        {
            std::vector<char> seen_v(static_cast<std::size_t>(a + b), 0);
            std::vector<int> st{0};
            seen_v[0] = 1;
            int cnt = 0;
            while (!st.empty()) {
                int x = st.back();
                st.pop_back();
                ++cnt;
                for (int y = 0; y < a + b; ++y) {
                    if (seen_v[y] || (x < a) == (y < a)) continue;
                    int i = x < a ? x : y, j = (x < a ? y : x) - a;
                    if (m >> (i * b + j) & 1U) {
                        seen_v[y] = 1;
                        st.push_back(y);
                    }
                }
            }
            if (cnt != a + b) continue;
        }
        std::iota(px.begin(), px.end(), 0);
        std::iota(py.begin(), py.end(), 0);
        std::uint32_t best = ~0U;
        do {
            std::iota(py.begin(), py.end(), 0);
            do {
                best = std::min(best, enc(px, py));
            } while (std::next_permutation(py.begin(), py.end()));
        } while (std::next_permutation(px.begin(), px.end()));
        if (!seen.insert(best).second) continue;
        Graph g(a + b);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (best >> (i * b + j) & 1U) g.add_edge(i, a + j);
        std::vector<Vertex> xs(static_cast<std::size_t>(a));
        std::iota(xs.begin(), xs.end(), 0);
        out.emplace_back(std::move(g), std::move(xs));
    }
    return out;
}

bool is_caterpillar(const Graph& t) {
    if (!localcross::is_tree(t)) return false;
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < t.vertex_count(); ++v)
        if (t.degree(v) >= 2) inner.push_back(v);
    if (inner.size() <= 1) return true;
    auto sub = localcross::induced_subgraph(t, inner);
    // The non-leaf vertices form a subtree; it must be a path.
    for (Vertex v = 0; v < sub.graph.vertex_count(); ++v)
        if (sub.graph.degree(v) > 2) return false;
    return localcross::is_connected(sub.graph);
}

bool has_minor(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    const int t = h.vertex_count();
    if (t > n) return false;
    // Interchangeable branch sets: vertices of h with identical neighbourhoods.
    std::vector<int> group(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        group[i] = i;
        for (int j = 0; j < i; ++j) {
            auto ni = h.neighbors(i), nj = h.neighbors(j);
            std::erase(ni, j);
            std::erase(nj, i);
            if (ni == nj) {
                group[i] = group[j];
                break;
            }
        }
    }
    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(t), 0);

    auto check = [&]() {
        for (int p = 0; p < t; ++p)
            if (!used[p]) return false;
        // Connectivity of every branch set.
        for (int p = 0; p < t; ++p) {
            std::vector<Vertex> part;
            for (Vertex v = 0; v < n; ++v)
                if (assign[v] == p) part.push_back(v);
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            std::vector<Vertex> st{part[0]};
            seen[part[0]] = 1;
            std::size_t cnt = 0;
            while (!st.empty()) {
                Vertex x = st.back();
                st.pop_back();
                ++cnt;
                for (Vertex y : g.neighbors(x))
                    if (!seen[y] && assign[y] == p) {
                        seen[y] = 1;
                        st.push_back(y);
                    }
            }
            if (cnt != part.size()) return false;
        }
        for (const auto& e : h.edges()) {
            bool ok = false;
            for (const auto& f : g.edges()) {
                int a = assign[f.u], b = assign[f.v];
                if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    };

    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) return check();
        assign[v] = -1;
        if (rec(v + 1)) return true;
        for (int p = 0; p < t; ++p) {
            if (!used[p]) {
                // Among interchangeable unused sets only the smallest may open.
                bool earlier_unused = false;
                for (int q = 0; q < p; ++q)
                    if (group[q] == group[p] && !used[q]) earlier_unused = true;
                if (earlier_unused) continue;
            }
            bool was = used[p];
            used[p] = 1;
            assign[v] = p;
            if (rec(v + 1)) return true;
            used[p] = was;
            assign[v] = -1;
        }
        return false;
    };
    return rec(0);
}

bool outerplanar_by_minors(const Graph& g) {
    static const Graph k4 = localcross::complete_graph(4);
    static const Graph k23 = localcross::complete_bipartite(2, 3).graph();
    return !has_minor(g, k4) && !has_minor(g, k23);
}

bool partition_exists(const std::vector<long long>& a) {
    long long total = std::accumulate(a.begin(), a.end(), 0LL);
    if (total % 2) return false;
    const std::size_t n = a.size();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        long long sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (s >> i & 1U) sum += a[i];
        if (2 * sum == total) return true;
    }
    return false;
}

}  // namespace lctest
