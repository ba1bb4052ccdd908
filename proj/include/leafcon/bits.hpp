#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace leafcon {

// Set of vertices drawn from a fixed universe {0, ..., universe-1}, packed
// into 64-bit words. Adjacency rows and vertex subsets share this type so
// set algebra stays word-parallel for graphs well past 64 vertices.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : size_(universe), words_(word_count(universe), 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    int universe() const { return size_; }

    bool test(int i) const { return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool operator==(const VertexSet&) const = default;

    VertexSet& operator&=(const VertexSet& o) {
        require_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        require_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this \ o
    VertexSet& subtract(const VertexSet& o) {
        require_same(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }

    bool intersects(const VertexSet& o) const {
        require_same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool subset_of(const VertexSet& o) const {
        require_same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // First set bit at or after a position; -1 when exhausted.
    int first() const { return scan(0); }
    int next(int i) const { return scan(i + 1); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

private:
    static size_t word_count(int universe) {
        return (static_cast<size_t>(universe < 0 ? 0 : universe) + 63) / 64;
    }
    void trim() {
        if (size_ & 63) words_.back() &= (uint64_t{1} << (size_ & 63)) - 1;
    }
    void require_same(const VertexSet& o) const {
        if (size_ != o.size_) throw std::logic_error("VertexSet: universe mismatch");
    }
    int scan(int i) const {
        if (i < 0) i = 0;
        while (i < size_) {
            uint64_t w = words_[static_cast<size_t>(i) >> 6] >> (i & 63);
            if (w) return i + std::countr_zero(w);
            i = (i | 63) + 1;
        }
        return -1;
    }

    int size_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace leafcon
