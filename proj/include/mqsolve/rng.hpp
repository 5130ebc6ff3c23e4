#pragma once

#include <cstdint>

namespace mqsolve {

// splitmix64 stream (Steele, Lea, Flood 2014). Chosen over std::mt19937_64
// because the output sequence is pinned by the on-disk formats: generated
// systems and per-branch seeds must be bit-identical across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform bits, consumed LSB-first from consecutive outputs.
    bool next_bit() {
        if (bits_left_ == 0) {
            buffer_ = next();
            bits_left_ = 64;
        }
        bool b = (buffer_ & 1u) != 0;
        buffer_ >>= 1;
        --bits_left_;
        return b;
    }

    // Uniform value in [0, bound) by rejection; bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t mask = ~std::uint64_t{0};
        if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
        std::uint64_t limit = mask - mask % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

private:
    std::uint64_t state_;
    std::uint64_t buffer_ = 0;
    int bits_left_ = 0;
};

// First output of a stream seeded with x; used to derive per-branch and
// per-trial seeds so results do not depend on worker scheduling.
inline std::uint64_t splitmix64_once(std::uint64_t x) { return SplitMix64(x).next(); }

} // namespace mqsolve
