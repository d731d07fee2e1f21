#ifndef LSPAN_VERTEX_SET_HPP
#define LSPAN_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

// Width of a vertex set in 64-bit words. Every subset operation in the
// solver is algebra on these sets, so they are fixed-width bitsets; one
// word (n <= 64) is plenty for anything the search can finish.
#ifndef LSPAN_VERTEX_WORDS
#define LSPAN_VERTEX_WORDS 1
#endif

namespace lspan {

template <unsigned Words>
class BasicVertexSet {
    static_assert(Words >= 1, "vertex set needs at least one word");

public:
    static constexpr int capacity = static_cast<int>(Words) * 64;

    constexpr BasicVertexSet() = default;

    BasicVertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) add(v);
    }

    /// The set {0, ..., n-1}.
    static BasicVertexSet range(int n) {
        assert(n >= 0 && n <= capacity);
        BasicVertexSet s;
        for (int w = 0; n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return s;
    }

    static BasicVertexSet single(int v) {
        BasicVertexSet s;
        s.add(v);
        return s;
    }

    bool contains(int v) const {
        assert(v >= 0 && v < capacity);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        assert(v >= 0 && v < capacity);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        assert(v >= 0 && v < capacity);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool intersects(const BasicVertexSet& o) const {
        for (unsigned i = 0; i < Words; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const BasicVertexSet& o) const {
        for (unsigned i = 0; i < Words; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    BasicVertexSet& operator|=(const BasicVertexSet& o) {
        for (unsigned i = 0; i < Words; ++i) words_[i] |= o.words_[i];
        return *this;
    }

    BasicVertexSet& operator&=(const BasicVertexSet& o) {
        for (unsigned i = 0; i < Words; ++i) words_[i] &= o.words_[i];
        return *this;
    }

    /// Set difference.
    BasicVertexSet& operator-=(const BasicVertexSet& o) {
        for (unsigned i = 0; i < Words; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
    friend BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
    friend BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }

    friend bool operator==(const BasicVertexSet& a, const BasicVertexSet& b) {
        return a.words_ == b.words_;
    }
    friend bool operator!=(const BasicVertexSet& a, const BasicVertexSet& b) {
        return !(a == b);
    }

    // Arbitrary but total order; lets tests sort and compare collections of sets.
    friend bool operator<(const BasicVertexSet& a, const BasicVertexSet& b) {
        for (unsigned i = Words; i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    /// Smallest member, or -1 when empty.
    int first() const { return first_at_or_after(0); }

    /// Smallest member strictly greater than v, or -1.
    int next_after(int v) const { return v + 1 >= capacity ? -1 : first_at_or_after(v + 1); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v = first(); v >= 0; v = next_after(v)) out.push_back(v);
        return out;
    }

    class const_iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        const_iterator(const BasicVertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = set_->next_after(v_);
            return *this;
        }
        bool operator==(const const_iterator& o) const { return v_ == o.v_; }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }

    private:
        const BasicVertexSet* set_;
        int v_;
    };

    const_iterator begin() const { return {this, first()}; }
    const_iterator end() const { return {this, -1}; }

private:
    int first_at_or_after(int v) const {
        unsigned w = static_cast<unsigned>(v) >> 6;
        if (w >= Words) return -1;
        std::uint64_t masked = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (masked) return static_cast<int>(w * 64 + std::countr_zero(masked));
            if (++w == Words) return -1;
            masked = words_[w];
        }
    }

    std::array<std::uint64_t, Words> words_{};
};

using VertexSet = BasicVertexSet<LSPAN_VERTEX_WORDS>;

} // namespace lspan

#endif
