#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace abaf {

/// Fixed-universe bit set. The tag parameter keeps sets over different
/// universes (atoms, assumptions, arguments) from being mixed up.
template <class Tag>
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return size_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    bool contains(std::size_t i) const { return i < size_ && test(i); }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const IndexSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }
    bool intersects(const IndexSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    IndexSet& operator|=(const IndexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    IndexSet& operator&=(const IndexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    /// Set difference.
    IndexSet& operator-=(const IndexSet& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    /// Orders by the set viewed as a binary number, highest index most significant.
    friend bool operator<(const IndexSet& a, const IndexSet& b) {
        for (std::size_t k = a.words_.size(); k-- > 0;)
            if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
        return a.size_ < b.size_;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = size_;
        for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

    /// Reinterpret the bits under another tag (same universe).
    template <class Other>
    IndexSet<Other> as() const {
        IndexSet<Other> out;
        out.size_ = size_;
        out.words_ = words_;
        return out;
    }

private:
    template <class>
    friend class IndexSet;

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct AtomTag {};
struct AssumptionTag {};
struct ArgumentTag {};

/// Set of atoms of L, indexed by atom id.
using AtomSet = IndexSet<AtomTag>;
/// Set of assumptions, indexed by atom id; only assumption ids may be members.
using AssumptionSet = IndexSet<AssumptionTag>;
/// Set of arguments of a BAF, indexed by argument id.
using ArgSet = IndexSet<ArgumentTag>;

struct IndexSetHash {
    template <class Tag>
    std::size_t operator()(const IndexSet<Tag>& s) const { return s.hash(); }
};

}  // namespace abaf
