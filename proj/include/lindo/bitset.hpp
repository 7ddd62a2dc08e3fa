#ifndef LINDO_BITSET_HPP
#define LINDO_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace lindo {

// Fixed-capacity bitset sized at construction. Adjacency rows and
// neighborhood intersections are the hot path of obstruction detection,
// so these are word-parallel.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // First set bit, or -1.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    // First set bit strictly after i, or -1.
    int next(int i) const {
        ++i;
        if (i >= n_) return -1;
        std::size_t word = static_cast<std::size_t>(i) >> 6;
        std::uint64_t w = w_[word] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return static_cast<int>(word * 64 + std::countr_zero(w));
            if (++word >= w_.size()) return -1;
            w = w_[word];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // true iff *this is a subset of o
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }

    bool operator==(const Bitset& o) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace lindo

#endif
