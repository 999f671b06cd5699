#include "localcross/vertex_set.hpp"

#include <algorithm>
#include <bit>

#include "localcross/errors.hpp"

namespace localcross {

VertexSet::VertexSet(int universe)
    : universe_(universe), words_(static_cast<std::size_t>((universe + 63) / 64), 0) {
    if (universe < 0) throw InputError("negative universe");
}

bool VertexSet::contains(int v) const {
    if (v < 0 || v >= universe_) return false;
    return (words_[v >> 6] >> (v & 63)) & 1U;
}

void VertexSet::insert(int v) {
    if (v < 0 || v >= universe_) throw InputError("vertex outside set universe");
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
    if (v < 0 || v >= universe_) return;
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
    int s = 0;
    for (auto w : words_) s += std::popcount(w);
    return s;
}

bool VertexSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto w = words_[i];
        while (w) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(i * 64) + b);
            w &= w - 1;
        }
    }
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        auto o = i < other.words_.size() ? other.words_[i] : 0;
        if (words_[i] & ~o) return false;
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (other.universe_ > universe_) {
        universe_ = other.universe_;
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::operator<(const VertexSet& other) const {
    if (universe_ != other.universe_) return universe_ < other.universe_;
    return words_ < other.words_;
}

std::size_t VertexSet::hash() const {
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(universe_);
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace localcross
