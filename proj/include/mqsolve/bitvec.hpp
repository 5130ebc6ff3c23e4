#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mqsolve {

// Packed GF(2) vector. Trailing pad bits in the last word are kept zero so
// that word-level comparisons and popcounts are valid.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    std::size_t num_words() const { return words_.size(); }
    const std::uint64_t* words() const { return words_.data(); }
    std::uint64_t* words() { return words_.data(); }
    std::uint64_t word(std::size_t w) const { return words_[w]; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void operator^=(const BitVec& o) {
        if (o.size_ != size_) throw std::invalid_argument("BitVec xor: size mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // Parity of the AND, i.e. the GF(2) inner product.
    bool dot(const BitVec& o) const {
        if (o.size_ != size_) throw std::invalid_argument("BitVec dot: size mismatch");
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return std::popcount(acc) & 1u;
    }

    // Index of the lowest set bit, or size() when zero.
    std::size_t lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return size_;
    }

    bool operator==(const BitVec& o) const { return size_ == o.size_ && words_ == o.words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace mqsolve
