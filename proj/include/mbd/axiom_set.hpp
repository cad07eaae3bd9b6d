#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace mbd {

using AxiomId = std::size_t;

// Subset of the suspect axioms {0, ..., universe-1}, stored as a bitmask.
// Every diagnosis, conflict set, tree path and "active" axiom subset is an
// AxiomSet over the same universe.
class AxiomSet {
public:
    AxiomSet() = default;
    explicit AxiomSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    AxiomSet(std::size_t universe, std::initializer_list<AxiomId> ids) : AxiomSet(universe) {
        for (AxiomId id : ids) insert(id);
    }
    template <typename Range>
    static AxiomSet of(std::size_t universe, const Range& ids) {
        AxiomSet s(universe);
        for (AxiomId id : ids) s.insert(id);
        return s;
    }
    static AxiomSet full(std::size_t universe) {
        AxiomSet s(universe);
        for (AxiomId i = 0; i < universe; ++i) s.insert(i);
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(AxiomId id) const { return (words_[id / 64] >> (id % 64)) & 1u; }
    void insert(AxiomId id) { words_[id / 64] |= std::uint64_t{1} << (id % 64); }
    void erase(AxiomId id) { words_[id / 64] &= ~(std::uint64_t{1} << (id % 64)); }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const AxiomSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const AxiomSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    AxiomSet& operator|=(const AxiomSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    AxiomSet& operator&=(const AxiomSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    AxiomSet& operator-=(const AxiomSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend AxiomSet operator|(AxiomSet a, const AxiomSet& b) { return a |= b; }
    friend AxiomSet operator&(AxiomSet a, const AxiomSet& b) { return a &= b; }
    friend AxiomSet operator-(AxiomSet a, const AxiomSet& b) { return a -= b; }

    AxiomSet complement() const {
        AxiomSet s = full(universe_);
        return s -= *this;
    }

    // Ascending ids.
    std::vector<AxiomId> ids() const {
        std::vector<AxiomId> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                out.push_back(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
        return out;
    }

    bool operator==(const AxiomSet& o) const = default;

    // Cardinality first, then lexicographic on ascending ids: the canonical
    // ordering used for deterministic output.
    std::strong_ordering operator<=>(const AxiomSet& o) const {
        if (auto c = size() <=> o.size(); c != 0) return c;
        auto a = ids();
        auto b = o.ids();
        return a <=> b;
    }

    std::size_t hash() const {
        std::size_t h = universe_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct AxiomSetHash {
    std::size_t operator()(const AxiomSet& s) const { return s.hash(); }
};

// "[ax1, ax3]" with 1-based labels.
std::string format_axioms(const AxiomSet& s);

}  // namespace mbd
