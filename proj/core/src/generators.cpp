#include "localcross/generators.hpp"

#include <algorithm>
#include <vector>

#include "localcross/errors.hpp"

namespace localcross {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("a cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

BipartiteInstance complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw InputError("negative side size");
    Graph g(a + b);
    std::vector<Vertex> xs;
    for (int i = 0; i < a; ++i) {
        xs.push_back(i);
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    }
    return BipartiteInstance(std::move(g), std::move(xs));
}

Graph caterpillar(int spine, int legs) {
    if (spine < 1 || legs < 0) throw InputError("caterpillar needs spine >= 1 and legs >= 0");
    Graph g(spine * (1 + legs));
    for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
    int next = spine;
    for (int i = 0; i < spine; ++i)
        for (int l = 0; l < legs; ++l) g.add_edge(i, next++);
    return g;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw InputError("empty range");
    return rng() % bound;
}

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw InputError("a tree needs at least one vertex");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> prufer(static_cast<std::size_t>(n - 2));
    for (auto& p : prufer) p = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n)));
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int p : prufer) ++deg[p];
    for (int p : prufer) {
        int leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        g.add_edge(leaf, p);
        --deg[leaf];
        --deg[p];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
        if (deg[v] == 1) (a < 0 ? a : b) = v;
    }
    g.add_edge(a, b);
    return g;
}

Graph random_connected(int n, int extra, std::mt19937_64& rng) {
    Graph g = random_tree(n, rng);
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    for (int i = 0; i < extra && g.edge_count() < max_m; ++i) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto a = static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(n)));
            auto b = static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(n)));
            if (a != b && !g.adjacent(a, b)) {
                g.add_edge(a, b);
                break;
            }
        }
    }
    return g;
}

BipartiteInstance random_bipartite(int nx, int ny, double p, std::mt19937_64& rng) {
    if (nx < 0 || ny < 0) throw InputError("negative side size");
    Graph g(nx + ny);
    const auto threshold = static_cast<std::uint64_t>(std::clamp(p, 0.0, 1.0) * 1'000'000.0);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (draw_below(rng, 1'000'000) < threshold) g.add_edge(i, nx + j);
    std::vector<Vertex> xs(static_cast<std::size_t>(nx));
    for (int i = 0; i < nx; ++i) xs[i] = i;
    return BipartiteInstance(std::move(g), std::move(xs));
}

BipartiteInstance random_connected_bipartite(int nx, int ny, int extra, std::mt19937_64& rng) {
    if (nx < 1 || ny < 1) throw InputError("both sides need a vertex");
    Graph g(nx + ny);
    // Attach vertices one by one to a random earlier vertex of the other side.
    std::vector<Vertex> pending;
    for (int i = 1; i < nx; ++i) pending.push_back(i);
    for (int j = 0; j < ny; ++j) pending.push_back(nx + j);
    for (std::size_t i = pending.size(); i > 1; --i) {
        std::swap(pending[i - 1], pending[draw_below(rng, i)]);
    }
    std::vector<Vertex> in_x{0}, in_y;
    std::vector<Vertex> deferred;
    auto attach = [&](Vertex v) {
        bool is_x = v < nx;
        auto& other = is_x ? in_y : in_x;
        if (other.empty()) return false;
        g.add_edge(v, other[draw_below(rng, other.size())]);
        (is_x ? in_x : in_y).push_back(v);
        return true;
    };
    for (Vertex v : pending)
        if (!attach(v)) deferred.push_back(v);
    for (Vertex v : deferred) attach(v);
    long long max_m = static_cast<long long>(nx) * ny;
    for (int i = 0; i < extra && g.edge_count() < max_m; ++i) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto a = static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(nx)));
            auto b = static_cast<Vertex>(nx + draw_below(rng, static_cast<std::uint64_t>(ny)));
            if (!g.adjacent(a, b)) {
                g.add_edge(a, b);
                break;
            }
        }
    }
    std::vector<Vertex> xs(static_cast<std::size_t>(nx));
    for (int i = 0; i < nx; ++i) xs[i] = i;
    return BipartiteInstance(std::move(g), std::move(xs));
}

}  // namespace localcross
