#include "frontier.hpp"

#include <algorithm>

namespace localcross::detail {

void Frontier::append_key(std::vector<std::int64_t>& key) const {
    key.push_back(has_barrier ? 1 : 0);
    key.push_back(static_cast<std::int64_t>(live.size()));
    for (Vertex y : live) key.push_back(y);
    for (const auto& le : loads) {
        key.push_back(le.edge);
        key.push_back(le.load);
    }
}

std::size_t KeyHash::operator()(const std::vector<std::int64_t>& key) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : key) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

FrontierEngine::FrontierEngine(const BipartiteInstance& inst, Weight k, WeightMode mode)
    : inst_(inst), g_(inst.graph()), k_(k), mode_(mode) {}

Weight FrontierEngine::term(EdgeId e, EdgeId f) const {
    switch (mode_) {
        case WeightMode::Count: return 1;
        case WeightMode::Sum: return g_.weight(f);
        case WeightMode::Product: return g_.weight(e) * g_.weight(f);
    }
    return 1;
}

bool FrontierEngine::y_done(Vertex y, const std::vector<char>& processed) const {
    for (Vertex x : g_.neighbors(y))
        if (!processed[x]) return false;
    return true;
}

namespace {

int index_of(const std::vector<Vertex>& live, Vertex y) {
    auto it = std::find(live.begin(), live.end(), y);
    return it == live.end() ? -1 : static_cast<int>(it - live.begin());
}

}  // namespace

void FrontierEngine::expand(const Frontier& fr, Vertex x, const std::vector<char>& processed,
                            const std::function<void(Frontier&&)>& emit) const {
    // Existing live edges with the position of their Y endpoint.
    std::vector<LoadEntry> base = fr.loads;
    std::vector<int> base_pos(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        base_pos[i] = index_of(fr.live, inst_.y_end(base[i].edge));

    std::vector<LoadEntry> added;
    std::vector<Vertex> fresh;
    for (EdgeId f : g_.incident(x)) {
        Vertex y = inst_.y_end(f);
        bool placed = false;
        for (Vertex nx : g_.neighbors(y)) {
            if (processed[nx]) {
                placed = true;
                break;
            }
        }
        if (!placed) {
            fresh.push_back(y);
            continue;
        }
        int idx = index_of(fr.live, y);
        if (idx < 0) return;  // y was already finalized left of the barrier
        Weight lf = 0;
        for (std::size_t i = 0; i < base.size(); ++i) {
            if (base_pos[i] <= idx) continue;
            EdgeId e = base[i].edge;
            base[i].load += term(e, f);
            lf += term(f, e);
            if (base[i].load > k_ || lf > k_) return;
        }
        bool at_barrier = fr.has_barrier && idx == 0;
        if (!at_barrier) added.push_back({f, lf});
    }

    std::sort(fresh.begin(), fresh.end());
    std::vector<EdgeId> fresh_edges;
    for (Vertex y : fresh) fresh_edges.push_back(g_.edge_id(x, y));

    const int lo = fr.has_barrier ? 1 : 0;

    // Recursive insertion of the fresh Y vertices in id order.
    std::vector<Vertex> live = fr.live;
    std::vector<int> pos = base_pos;
    std::vector<LoadEntry> fresh_loads;
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i == fresh.size()) {
            Frontier out;
            out.has_barrier = fr.has_barrier;
            out.live = live;
            out.loads = base;
            out.loads.insert(out.loads.end(), added.begin(), added.end());
            out.loads.insert(out.loads.end(), fresh_loads.begin(), fresh_loads.end());
            std::sort(out.loads.begin(), out.loads.end(),
                      [](const LoadEntry& a, const LoadEntry& b) { return a.edge < b.edge; });
            emit(std::move(out));
            return;
        }
        EdgeId f = fresh_edges[i];
        const int size = static_cast<int>(live.size());
        for (int at = lo; at <= size; ++at) {
            Weight lf = 0;
            bool ok = true;
            std::vector<Weight> saved(base.size());
            for (std::size_t b = 0; b < base.size(); ++b) {
                saved[b] = base[b].load;
                if (pos[b] < at) continue;
                EdgeId e = base[b].edge;
                base[b].load += term(e, f);
                lf += term(f, e);
                if (base[b].load > k_ || lf > k_) ok = false;
            }
            if (ok) {
                live.insert(live.begin() + at, fresh[i]);
                for (auto& p : pos)
                    if (p >= at) ++p;
                fresh_loads.push_back({f, lf});
                place(i + 1);
                fresh_loads.pop_back();
                for (auto& p : pos)
                    if (p > at) --p;
                live.erase(live.begin() + at);
            }
            for (std::size_t b = 0; b < base.size(); ++b) base[b].load = saved[b];
        }
    };
    place(0);
}

bool FrontierEngine::close(Frontier& fr, const std::vector<Vertex>& closing,
                           const std::vector<char>& processed, std::vector<Vertex>& dropped) const {
    int cut = fr.has_barrier ? 0 : -1;
    for (Vertex x : closing) {
        for (Vertex y : g_.neighbors(x)) {
            int idx = index_of(fr.live, y);
            cut = std::max(cut, idx);
        }
    }
    if (cut < 0 || (cut == 0 && fr.has_barrier)) return true;
    for (int i = 0; i < cut; ++i) {
        Vertex y = fr.live[static_cast<std::size_t>(i)];
        if (!y_done(y, processed)) return false;
        dropped.push_back(y);
    }
    fr.live.erase(fr.live.begin(), fr.live.begin() + cut);
    fr.has_barrier = true;
    Vertex barrier = fr.live.front();
    std::vector<LoadEntry> kept;
    kept.reserve(fr.loads.size());
    for (const auto& le : fr.loads) {
        Vertex y = inst_.y_end(le.edge);
        if (y == barrier) continue;
        if (index_of(fr.live, y) < 0) continue;
        kept.push_back(le);
    }
    fr.loads = std::move(kept);
    return true;
}

}  // namespace localcross::detail
