#include "localcross/outer.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>

#include "localcross/crossings.hpp"
#include "localcross/errors.hpp"

namespace localcross {

namespace {

std::vector<std::vector<Vertex>> components_without_pair(const Graph& g, Vertex u, Vertex v) {
    std::vector<Vertex> keep;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (x != u && x != v) keep.push_back(x);
    auto sub = induced_subgraph(g, keep);
    auto comps = connected_components(sub.graph);
    for (auto& c : comps)
        for (auto& x : c) x = sub.to_original[x];
    return comps;
}

// Exact enumeration of {R : |cut(R)| <= k} by deciding vertices in BFS order of G - {u,v}.
std::vector<VertexSet> candidates(const Graph& g, Vertex u, Vertex v, int k) {
    const int n = g.vertex_count();
    std::vector<Vertex> order;
    for (const auto& comp : components_without_pair(g, u, v)) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<Vertex> queue{comp.front()};
        seen[comp.front()] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex x = queue[i];
            order.push_back(x);
            for (Vertex y : g.neighbors(x)) {
                if (y == u || y == v || seen[y]) continue;
                seen[y] = 1;
                queue.push_back(y);
            }
        }
    }
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<VertexSet> out;
    VertexSet cur(n);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cut) {
        if (i == order.size()) {
            out.push_back(cur);
            return;
        }
        Vertex x = order[i];
        for (int s = 0; s < 2; ++s) {
            int add = 0;
            for (Vertex y : g.neighbors(x))
                if (side[y] >= 0 && side[y] != s) ++add;
            if (cut + add > k) continue;
            side[x] = s;
            if (s) cur.insert(x);
            rec(i + 1, cut + add);
            if (s) cur.erase(x);
            side[x] = -1;
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

int position_in(const std::vector<EdgeId>& order, EdgeId e) {
    auto it = std::find(order.begin(), order.end(), e);
    return it == order.end() ? 0 : static_cast<int>(it - order.begin()) + 1;
}

// Image of every edge relevant to a split inside the triangle frame.
std::vector<std::pair<EdgeId, CutMembership>> frame_edges(const Graph& g, Vertex u, Vertex v,
                                                          Vertex w,
                                                          const std::vector<EdgeId>& tau,
                                                          const std::vector<EdgeId>& tau1,
                                                          const std::vector<EdgeId>& tau2) {
    std::vector<EdgeId> rel(tau.begin(), tau.end());
    rel.insert(rel.end(), tau1.begin(), tau1.end());
    rel.insert(rel.end(), tau2.begin(), tau2.end());
    if (auto uv = g.find_edge(u, v)) rel.push_back(*uv);
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    std::vector<std::pair<EdgeId, CutMembership>> out;
    for (EdgeId c : rel) {
        const Edge& e = g.edge(c);
        CutMembership m;
        m.is_uv = e.has(u) && e.has(v);
        m.tau = position_in(tau, c);
        m.tau1 = position_in(tau1, c);
        m.tau2 = position_in(tau2, c);
        int touches = (e.has(u) ? 1 : 0) + (e.has(v) ? 1 : 0) + (e.has(w) ? 1 : 0);
        if (touches == 1) m.apex = e.has(u) ? 'u' : e.has(v) ? 'v' : 'w';
        out.emplace_back(c, m);
    }
    return out;
}

bool interleave(int a, int b, int c, int d) {
    if (a == c || a == d || b == c || b == d) return false;
    if (a > b) std::swap(a, b);
    return (a < c && c < b) != (a < d && d < b);
}

std::vector<EdgeId> sorted_copy(std::vector<EdgeId> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::vector<EdgeId> cut_edges(const Graph& g, Vertex u, Vertex v, const VertexSet& r) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        bool a = r.contains(ed.u), b = r.contains(ed.v);
        if (a == b) continue;
        Vertex other = a ? ed.v : ed.u;
        if (other == u || other == v) continue;
        out.push_back(e);
    }
    return out;
}

std::vector<VertexSet> enumerate_candidate_Rs(const Graph& g, Vertex u, Vertex v, int k) {
    if (!is_biconnected(g)) throw InputError("candidate enumeration needs a biconnected graph");
    if (u == v || u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw InputError("bad vertex pair");
    if (k < 0) throw InputError("k must be nonnegative");
    return candidates(g, u, v, k);
}

std::vector<int> triangle_crossings(int l, int l1, int l2, const std::vector<CutMembership>& edges) {
    const int U = 0, V = l + 1, W = l + l2 + 2;
    auto term = [&](int which, int i) {
        if (which == 0) return i;
        if (which == 2) return l + l2 + 2 - i;
        return l + l2 + l1 + 3 - i;
    };
    std::vector<std::pair<int, int>> ends;
    for (const auto& m : edges) {
        if (m.is_uv) {
            ends.emplace_back(U, V);
            continue;
        }
        std::vector<int> ps;
        if (m.tau) ps.push_back(term(0, m.tau));
        if (m.tau1) ps.push_back(term(1, m.tau1));
        if (m.tau2) ps.push_back(term(2, m.tau2));
        if (ps.size() == 3) throw InvariantError("edge lies in all three cuts");
        if (ps.size() == 1) {
            if (m.apex == 'u') ps.push_back(U);
            else if (m.apex == 'v') ps.push_back(V);
            else if (m.apex == 'w') ps.push_back(W);
            else throw InvariantError("single-cut edge without an apex endpoint");
        }
        if (ps.size() != 2) throw InvariantError("edge has no image in the triangle frame");
        ends.emplace_back(ps[0], ps[1]);
    }
    std::vector<int> out(edges.size(), 0);
    for (std::size_t i = 0; i < ends.size(); ++i)
        for (std::size_t j = i + 1; j < ends.size(); ++j)
            if (interleave(ends[i].first, ends[i].second, ends[j].first, ends[j].second)) {
                ++out[i];
                ++out[j];
            }
    return out;
}

bool check_consistency(const Graph& g, int k, const OuterSubproblem& p, const OuterSplit& s) {
    const Vertex u = p.u, v = p.v, w = s.w;
    const auto& L = s.left;
    const auto& Rt = s.right;
    if (L.u != u || L.v != w || Rt.u != w || Rt.v != v) return false;
    if (!p.r.contains(w)) return false;
    VertexSet rest = p.r;
    rest.erase(w);
    if (L.r.intersects(Rt.r) || (L.r | Rt.r) != rest) return false;
    if (sorted_copy(p.tau) != cut_edges(g, u, v, p.r)) return false;
    if (sorted_copy(L.tau) != cut_edges(g, u, w, L.r)) return false;
    if (sorted_copy(Rt.tau) != cut_edges(g, w, v, Rt.r)) return false;
    // Bullet 1: both cuts small.
    if (static_cast<int>(L.tau.size()) > k || static_cast<int>(Rt.tau.size()) > k) return false;
    if (p.chi.size() != p.tau.size() || L.chi.size() != L.tau.size() ||
        Rt.chi.size() != Rt.tau.size())
        return false;

    auto fe = frame_edges(g, u, v, w, p.tau, L.tau, Rt.tau);
    std::vector<CutMembership> ms;
    for (auto& [e, m] : fe) ms.push_back(m);
    auto h = triangle_crossings(static_cast<int>(p.tau.size()), static_cast<int>(L.tau.size()),
                                static_cast<int>(Rt.tau.size()), ms);
    for (std::size_t i = 0; i < fe.size(); ++i) {
        const auto& m = fe[i].second;
        int x = h[i];
        int chi = m.tau ? p.chi[m.tau - 1] : 0;
        int c1 = m.tau1 ? L.chi[m.tau1 - 1] : 0;
        int c2 = m.tau2 ? Rt.chi[m.tau2 - 1] : 0;
        if (m.tau && m.tau1 && c1 != chi - x) return false;         // L - R1
        if (m.tau && m.tau2 && c2 != chi - x) return false;         // L - R2
        if (m.tau && !m.tau1 && !m.tau2 && chi != x) return false;  // L - w
        if (m.tau1 && !m.tau && !m.tau2 && c1 + x > k) return false;  // v - R1
        if (m.tau2 && !m.tau && !m.tau1 && c2 + x > k) return false;  // u - R2
        if (m.tau1 && m.tau2 && c1 + c2 + x > k) return false;        // R1 - R2
    }
    return true;
}

bool verify_subproblem(const Graph& g, int k, const OuterSubproblem& sub,
                       const std::vector<Vertex>& seq) {
    const int l = static_cast<int>(sub.tau.size());
    if (seq.size() != static_cast<std::size_t>(sub.r.size() + 2)) return false;
    if (seq.front() != sub.v || seq.back() != sub.u) return false;
    // Local ids: the cycle (u, t_1..t_l, v, seq[1..m]).
    std::vector<Vertex> cycle_orig;  // -1 marks terminals
    cycle_orig.push_back(sub.u);
    for (int i = 0; i < l; ++i) cycle_orig.push_back(-1 - i);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) cycle_orig.push_back(seq[i]);
    const int n = static_cast<int>(cycle_orig.size());
    std::map<Vertex, int> local;
    for (int i = 0; i < n; ++i) local[cycle_orig[i]] = i;
    for (Vertex x : seq)
        if (x != sub.u && x != sub.v && !sub.r.contains(x)) return false;
    if (local.size() != static_cast<std::size_t>(n)) return false;
    Graph h(n);
    for (const auto& e : g.edges()) {
        auto a = local.find(e.u), b = local.find(e.v);
        if (a != local.end() && b != local.end()) h.add_edge(a->second, b->second);
    }
    std::vector<EdgeId> term_edges;
    for (int i = 0; i < l; ++i) {
        const Edge& c = g.edge(sub.tau[static_cast<std::size_t>(i)]);
        Vertex inside = sub.r.contains(c.u) ? c.u : c.v;
        term_edges.push_back(h.add_edge(local.at(inside), local.at(-1 - i)));
    }
    std::vector<Vertex> cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cyc[i] = i;
    auto cr = circular_crossings_per_edge(h, CircularDrawing{cyc});
    for (int c : cr)
        if (c > k) return false;
    for (int i = 0; i < l; ++i)
        if (cr[term_edges[i]] > sub.chi[static_cast<std::size_t>(i)]) return false;
    return true;
}

namespace {

struct MemoKey {
    Vertex u;
    Vertex v;
    VertexSet r;
    std::vector<EdgeId> tau;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const {
        std::size_t h = k.r.hash();
        h ^= static_cast<std::size_t>(k.u) * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::size_t>(k.v) * 0xc2b2ae3d27d4eb4fULL + (h << 6) + (h >> 2);
        for (EdgeId e : k.tau) h ^= static_cast<std::size_t>(e) + 0x165667b19e3779f9ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct Witness {
    Vertex w = -1;
    VertexSet r1, r2;
    std::vector<EdgeId> tau1, tau2;
    int chi1 = -1, chi2 = -1;
};

struct Entry {
    std::vector<std::vector<int>> chis;
    std::vector<Witness> witnesses;
    bool done = false;
};

class OuterSolver {
public:
    OuterSolver(const Graph& g, int k, std::int64_t cap) : g_(g), k_(k), cap_(cap) {}

    std::int64_t entries() const { return static_cast<std::int64_t>(memo_.size()); }

    // Feasible chi vectors for (u,v,R,tau).
    const Entry& compute(Vertex u, Vertex v, const VertexSet& r, const std::vector<EdgeId>& tau) {
        MemoKey key{u, v, r, tau};
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            if (!it->second.done) throw InvariantError("cyclic outer subproblem dependency");
            return it->second;
        }
        if (static_cast<std::int64_t>(memo_.size()) >= cap_)
            throw ResourceError("outer DP exceeded table cap of " + std::to_string(cap_) +
                                " entries");
        Entry& entry = memo_[key];
        if (r.empty()) {
            entry.chis.push_back({});
            entry.witnesses.push_back({});
            entry.done = true;
            return entry;
        }
        for (Vertex w : r.members()) {
            VertexSet rest = r;
            rest.erase(w);
            for (const VertexSet& r1 : cands(u, w)) {
                if (!r1.is_subset_of(rest)) continue;
                VertexSet r2 = rest - r1;
                auto c2 = cut_edges(g_, w, v, r2);
                if (static_cast<int>(c2.size()) > k_) continue;
                auto c1 = cut_edges(g_, u, w, r1);
                split(entry, u, v, w, tau, r1, c1, r2, c2);
            }
        }
        entry.done = true;
        return entry;
    }

    std::vector<Vertex> reconstruct(Vertex u, Vertex v, const VertexSet& r,
                                    const std::vector<EdgeId>& tau, int chi_index,
                                    std::vector<OuterTraceNode>* nodes) {
        const Entry& e = memo_.at(MemoKey{u, v, r, tau});
        const auto& chi = e.chis.at(static_cast<std::size_t>(chi_index));
        std::size_t slot = 0;
        if (nodes) {
            slot = nodes->size();
            nodes->push_back({OuterSubproblem{u, v, r, tau, chi}, std::nullopt, {}});
        }
        std::vector<Vertex> seq;
        if (r.empty()) {
            seq = {v, u};
        } else {
            const Witness& wit = e.witnesses.at(static_cast<std::size_t>(chi_index));
            auto s2 = reconstruct(wit.w, v, wit.r2, wit.tau2, wit.chi2, nodes);
            auto s1 = reconstruct(u, wit.w, wit.r1, wit.tau1, wit.chi1, nodes);
            seq = s2;
            seq.insert(seq.end(), s1.begin() + 1, s1.end());
            if (nodes) {
                const Entry& e1 = memo_.at(MemoKey{u, wit.w, wit.r1, wit.tau1});
                const Entry& e2 = memo_.at(MemoKey{wit.w, v, wit.r2, wit.tau2});
                OuterSplit sp;
                sp.w = wit.w;
                sp.left = {u, wit.w, wit.r1, wit.tau1, e1.chis[wit.chi1]};
                sp.right = {wit.w, v, wit.r2, wit.tau2, e2.chis[wit.chi2]};
                (*nodes)[slot].split = std::move(sp);
            }
        }
        if (nodes) (*nodes)[slot].seq = seq;
        return seq;
    }

private:
    const std::vector<VertexSet>& cands(Vertex a, Vertex b) {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        auto it = cand_.find(key);
        if (it != cand_.end()) return it->second;
        return cand_.emplace(key, candidates(g_, a, b, k_)).first->second;
    }

    void split(Entry& entry, Vertex u, Vertex v,
               Vertex w, const std::vector<EdgeId>& tau, const VertexSet& r1,
               const std::vector<EdgeId>& c1, const VertexSet& r2, const std::vector<EdgeId>& c2) {
        std::vector<EdgeId> tau1 = c1;
        do {
            const Entry& f1 = compute(u, w, r1, tau1);
            if (f1.chis.empty()) continue;
            std::vector<EdgeId> tau2 = c2;
            do {
                const Entry& f2 = compute(w, v, r2, tau2);
                if (f2.chis.empty()) continue;
                combine(entry, u, v, w, tau, r1, tau1, f1, r2, tau2, f2);
            } while (std::next_permutation(tau2.begin(), tau2.end()));
        } while (std::next_permutation(tau1.begin(), tau1.end()));
    }

    void combine(Entry& entry, Vertex u, Vertex v,
                 Vertex w, const std::vector<EdgeId>& tau, const VertexSet& r1,
                 const std::vector<EdgeId>& tau1, const Entry& f1, const VertexSet& r2,
                 const std::vector<EdgeId>& tau2, const Entry& f2) {
        auto fe = frame_edges(g_, u, v, w, tau, tau1, tau2);
        std::vector<CutMembership> ms;
        ms.reserve(fe.size());
        for (auto& p : fe) ms.push_back(p.second);
        auto h = triangle_crossings(static_cast<int>(tau.size()), static_cast<int>(tau1.size()),
                                    static_cast<int>(tau2.size()), ms);
        // Edges from w into L have their whole budget fixed by the frame.
        for (std::size_t i = 0; i < ms.size(); ++i)
            if (ms[i].tau && !ms[i].tau1 && !ms[i].tau2 && h[i] > k_) return;

        std::vector<int> chi(tau.size());
        for (std::size_t a = 0; a < f1.chis.size(); ++a) {
            const auto& x1 = f1.chis[a];
            for (std::size_t b = 0; b < f2.chis.size(); ++b) {
                const auto& x2 = f2.chis[b];
                bool ok = true;
                for (std::size_t i = 0; i < ms.size() && ok; ++i) {
                    const auto& m = ms[i];
                    int c1 = m.tau1 ? x1[m.tau1 - 1] : 0;
                    int c2 = m.tau2 ? x2[m.tau2 - 1] : 0;
                    int total = c1 + c2 + h[i];
                    if (total > k_) ok = false;
                    if (m.tau) chi[m.tau - 1] = total;
                }
                if (!ok || dominated(entry, chi)) continue;
                drop_dominated_by(entry, chi);
                entry.chis.push_back(chi);
                entry.witnesses.push_back(Witness{w, r1, r2, tau1, tau2, static_cast<int>(a),
                                                  static_cast<int>(b)});
            }
        }
    }

    static bool leq(const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    }

    static bool dominated(const Entry& e, const std::vector<int>& chi) {
        for (const auto& c : e.chis)
            if (leq(c, chi)) return true;
        return false;
    }

    static void drop_dominated_by(Entry& e, const std::vector<int>& chi) {
        std::size_t out = 0;
        for (std::size_t i = 0; i < e.chis.size(); ++i) {
            if (leq(chi, e.chis[i])) continue;
            if (out != i) {
                e.chis[out] = std::move(e.chis[i]);
                e.witnesses[out] = std::move(e.witnesses[i]);
            }
            ++out;
        }
        e.chis.resize(out);
        e.witnesses.resize(out);
    }

    const Graph& g_;
    int k_;
    std::int64_t cap_;
    std::unordered_map<MemoKey, Entry, MemoKeyHash> memo_;
    std::map<std::pair<Vertex, Vertex>, std::vector<VertexSet>> cand_;
};

bool pair_filter_ok(const Graph& g, int k) {
    const int n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            auto comps = components_without_pair(g, a, b);
            if (static_cast<int>(comps.size()) + (g.adjacent(a, b) ? 1 : 0) > 2 * k + 3)
                return false;
        }
    return true;
}

struct PairOutcome {
    bool yes = false;
    std::vector<Vertex> seq;
    std::vector<OuterTraceNode> nodes;
    std::int64_t entries = 0;
};

PairOutcome try_pair(OuterSolver& solver, const Graph& g, Vertex v) {
    PairOutcome out;
    VertexSet rest(g.vertex_count());
    for (Vertex x = 1; x < g.vertex_count(); ++x)
        if (x != v) rest.insert(x);
    const Entry& e = solver.compute(0, v, rest, {});
    if (e.chis.empty()) return out;
    out.yes = true;
    out.seq = solver.reconstruct(0, v, rest, {}, 0, &out.nodes);
    return out;
}

void check_splitters(const Graph& g, int k, const CircularDrawing& d,
                     const std::vector<OuterTraceNode>& nodes) {
    for (const auto& node : nodes) {
        if (!node.split) continue;
        Vertex w = node.split->w;
        if (pierce_count(g, d, node.sub.u, w) > k || pierce_count(g, d, node.sub.v, w) > k)
            throw InvariantError("splitter vertex pair pierced by more than k edges");
    }
}

std::optional<OuterResult> solve_block(const Graph& g, int k, const SolverOptions& opt,
                                       SolveStats& stats, bool keep_nodes) {
    if (k < 0) throw InputError("k must be nonnegative");
    const int n = g.vertex_count();
    if (n <= 2) {
        OuterResult r;
        for (Vertex x = 0; x < n; ++x) r.drawing.cycle.push_back(x);
        return r;
    }
    if (!is_biconnected(g)) throw InputError("graph is not biconnected");
    if (!density_guard(g, k)) return std::nullopt;
    if (!pair_filter_ok(g, k)) return std::nullopt;

    std::optional<PairOutcome> found;
    const int jobs = std::max(1, std::min(opt.jobs, n - 1));
    if (jobs == 1) {
        OuterSolver solver(g, k, opt.table_cap);
        for (Vertex v = 1; v < n && !found; ++v) {
            auto o = try_pair(solver, g, v);
            if (o.yes) found = std::move(o);
        }
        stats.entries_created += solver.entries();
        stats.peak_entries = std::max(stats.peak_entries, solver.entries());
    } else {
        std::vector<std::optional<PairOutcome>> results(static_cast<std::size_t>(n));
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
        std::vector<std::int64_t> counts(static_cast<std::size_t>(jobs), 0);
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                OuterSolver solver(g, k, opt.table_cap);
                try {
                    for (Vertex v = 1 + t; v < n; v += jobs) {
                        auto o = try_pair(solver, g, v);
                        if (o.yes) {
                            results[v] = std::move(o);
                            break;
                        }
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
                counts[t] = solver.entries();
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (int t = 0; t < jobs; ++t) {
            stats.entries_created += counts[t];
            stats.peak_entries = std::max(stats.peak_entries, counts[t]);
        }
        for (Vertex v = 1; v < n && !found; ++v)
            if (results[v]) found = std::move(results[v]);
    }
    if (!found) return std::nullopt;

    OuterResult res;
    res.drawing = CircularDrawing{found->seq}.canonical();
    if (!is_outer_k_planar(g, res.drawing, k))
        throw InvariantError("outer DP produced a drawing that fails verification");
    check_splitters(g, k, res.drawing, found->nodes);
    if (keep_nodes) res.nodes = std::move(found->nodes);
    return res;
}

}  // namespace

std::optional<OuterResult> solve_outer_biconnected_traced(const Graph& g, int k,
                                                          const SolverOptions& options,
                                                          SolveStats* stats) {
    SolveStats local;
    return solve_block(g, k, options, stats ? *stats : local, true);
}

std::optional<CircularDrawing> solve_outer_biconnected(const Graph& g, int k,
                                                       const SolverOptions& options,
                                                       SolveStats* stats) {
    SolveStats local;
    auto r = solve_block(g, k, options, stats ? *stats : local, false);
    if (!r) return std::nullopt;
    return r->drawing;
}

std::optional<CircularDrawing> solve_outer(const Graph& g, int k, const SolverOptions& options,
                                           SolveStats* stats_out) {
    if (k < 0) throw InputError("k must be nonnegative");
    SolveStats local;
    SolveStats& stats = stats_out ? *stats_out : local;
    const int n = g.vertex_count();
    auto blocks = biconnected_components(g);
    std::vector<std::vector<Vertex>> block_cycles(blocks.size());
    std::vector<std::vector<int>> blocks_of(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (Vertex x : blocks[b]) blocks_of[x].push_back(static_cast<int>(b));
        auto sub = induced_subgraph(g, blocks[b]);
        auto d = solve_block(sub.graph, k, options, stats, false);
        if (!d) return std::nullopt;
        for (Vertex x : d->drawing.cycle) block_cycles[b].push_back(sub.to_original[x]);
    }

    std::vector<Vertex> cycle;
    std::vector<char> placed_block(blocks.size(), 0);
    std::vector<char> placed_vertex(static_cast<std::size_t>(n), 0);
    for (const auto& comp : connected_components(g)) {
        std::vector<Vertex> seq;
        std::vector<Vertex> frontier;
        auto place = [&](int b, Vertex at) {
            placed_block[b] = 1;
            auto cyc = block_cycles[b];
            if (at >= 0) {
                auto it = std::find(cyc.begin(), cyc.end(), at);
                std::rotate(cyc.begin(), it, cyc.end());
                auto pos = std::find(seq.begin(), seq.end(), at);
                seq.insert(pos + 1, cyc.begin() + 1, cyc.end());
            } else {
                seq = cyc;
            }
            for (Vertex x : cyc) {
                if (!placed_vertex[x]) {
                    placed_vertex[x] = 1;
                    frontier.push_back(x);
                }
            }
        };
        place(blocks_of[comp.front()].front(), -1);
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            Vertex c = frontier[i];
            for (int b : blocks_of[c])
                if (!placed_block[b]) place(b, c);
        }
        cycle.insert(cycle.end(), seq.begin(), seq.end());
    }
    CircularDrawing d = CircularDrawing{cycle}.canonical();
    if (!is_outer_k_planar(g, d, k))
        throw InvariantError("stitched block drawings fail verification");
    return d;
}

std::optional<int> local_outer_crossing_number(const Graph& g, int k_max,
                                               const SolverOptions& options) {
    if (k_max < 0) throw InputError("k_max must be nonnegative");
    for (int k = 0; k <= k_max; ++k)
        if (solve_outer(g, k, options)) return k;
    return std::nullopt;
}

}  // namespace localcross
