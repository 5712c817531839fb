#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace wsatlab {

// Set of vertex ids 0..n-1 backed by 64-bit words. All binary operations
// require both operands to share the same universe size.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_(word_count(n), 0) {}

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.words_) w = ~0ull;
        s.trim();
        return s;
    }

    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int i) const { return (words_[size_t(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[size_t(i) >> 6] |= 1ull << (i & 63); }
    void reset(int i) { words_[size_t(i) >> 6] &= ~(1ull << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& and_not(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    // Reuses this set's storage for a & b (universes must match).
    VertexSet& assign_and(const VertexSet& a, const VertexSet& b) {
        n_ = a.n_;
        words_.resize(a.words_.size());
        for (size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
        return *this;
    }

    // Drops every member < v.
    VertexSet& clear_below(int v) {
        size_t w = size_t(v) >> 6;
        for (size_t i = 0; i < w && i < words_.size(); ++i) words_[i] = 0;
        if (w < words_.size() && (v & 63)) words_[w] &= ~0ull << (v & 63);
        return *this;
    }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // Smallest member > after, or -1.
    int next(int after) const {
        size_t i = size_t(after + 1) >> 6;
        if (i >= words_.size()) return -1;
        uint64_t w = words_[i] & (~0ull << ((after + 1) & 63));
        while (true) {
            if (w) return int(i * 64 + std::countr_zero(w));
            if (++i == words_.size()) return -1;
            w = words_[i];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size_t(count()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    std::span<const uint64_t> words() const { return words_; }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    bool operator==(const VertexSet&) const = default;

private:
    static size_t word_count(int n) { return (size_t(n) + 63) / 64; }

    void trim() {
        if ((n_ & 63) && !words_.empty()) words_.back() &= ~0ull >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace wsatlab
