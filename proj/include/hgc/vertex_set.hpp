#pragma once

#include <cstdint>
#include <vector>

#include "hgc/errors.hpp"

namespace hgc {

/// Set of vertex ids over a fixed universe [0, N), bit-packed with a cached
/// cardinality. All binary operations require both operands to share the
/// same universe.
class VertexSet {
public:
    VertexSet() : universe_(0), count_(0) {}

    explicit VertexSet(int universe)
        : universe_(universe), count_(0), words_((universe + 63) / 64, 0) {
        if (universe < 0) throw Error(ErrorKind::InvalidParameter, "universe < 0");
    }

    VertexSet(int universe, std::initializer_list<int> ids) : VertexSet(universe) {
        for (int v : ids) insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    static VertexSet from_ids(int universe, const std::vector<int>& ids) {
        VertexSet s(universe);
        for (int v : ids) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int v) const {
        if (v < 0 || v >= universe_) return false;
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check_range(v);
        uint64_t bit = uint64_t{1} << (v & 63);
        if (!(words_[v >> 6] & bit)) {
            words_[v >> 6] |= bit;
            ++count_;
        }
    }

    void erase(int v) {
        check_range(v);
        uint64_t bit = uint64_t{1} << (v & 63);
        if (words_[v >> 6] & bit) {
            words_[v >> 6] &= ~bit;
            --count_;
        }
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        recount();
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        recount();
        return *this;
    }

    /// Set difference: removes every member of `o`.
    VertexSet& operator-=(const VertexSet& o) {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        recount();
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    bool is_subset_of(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Members in increasing order.
    std::vector<int> ids() const {
        std::vector<int> out;
        out.reserve(count_);
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t cur = words_[w];
            while (cur) {
                int bit = __builtin_ctzll(cur);
                out.push_back(static_cast<int>(w * 64 + bit));
                cur &= cur - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& fn) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t cur = words_[w];
            while (cur) {
                int bit = __builtin_ctzll(cur);
                fn(static_cast<int>(w * 64 + bit));
                cur &= cur - 1;
            }
        }
    }

    /// FNV-1a over the packed words; stable across runs for equal contents.
    uint64_t hash() const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t x) {
            for (int i = 0; i < 8; ++i) {
                h ^= (x >> (8 * i)) & 0xff;
                h *= 1099511628211ull;
            }
        };
        mix(static_cast<uint64_t>(universe_));
        for (uint64_t w : words_) mix(w);
        return h;
    }

private:
    void check_range(int v) const {
        if (v < 0 || v >= universe_)
            throw Error(ErrorKind::VertexOutOfRange, "vertex id out of range");
    }
    void check_universe(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw Error(ErrorKind::InvalidParameter, "universe mismatch");
    }
    void recount() {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        count_ = c;
    }

    int universe_;
    int count_;
    std::vector<uint64_t> words_;
};

}  // namespace hgc
