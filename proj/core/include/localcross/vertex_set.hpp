#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace localcross {

/// Dense bitset over vertex ids 0..universe-1. Value type, hashable, ordered.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    int universe() const { return universe_; }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    int size() const;
    bool empty() const;
    std::vector<int> members() const;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& other) const = default;
    bool operator<(const VertexSet& other) const;

    std::size_t hash() const;

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace localcross
