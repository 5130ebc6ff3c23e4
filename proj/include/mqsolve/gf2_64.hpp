#pragma once

#include <cstdint>

#if defined(__PCLMUL__)
#include <emmintrin.h>
#include <wmmintrin.h>
#endif

namespace mqsolve {

namespace detail {

struct Clmul128 {
    std::uint64_t lo;
    std::uint64_t hi;
};

#if defined(__PCLMUL__)
inline Clmul128 clmul64(std::uint64_t a, std::uint64_t b) {
    __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                     _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
    Clmul128 out;
    out.lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(r));
    out.hi = static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_srli_si128(r, 8)));
    return out;
}
#else
// Portable carryless multiply, 4 bits of a at a time with overflow repair.
inline Clmul128 clmul64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t table_lo[16], table_hi[16];
    table_lo[0] = 0;
    table_hi[0] = 0;
    for (int i = 1; i < 16; ++i) {
        int top = 31 - __builtin_clz(static_cast<unsigned>(i));
        table_lo[i] = table_lo[i ^ (1 << top)] ^ (b << top);
        table_hi[i] = table_hi[i ^ (1 << top)] ^ (top ? b >> (64 - top) : 0);
    }
    std::uint64_t lo = 0, hi = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        hi = (hi << 4) | (lo >> 60);
        lo <<= 4;
        unsigned nib = static_cast<unsigned>((a >> shift) & 0xF);
        lo ^= table_lo[nib];
        hi ^= table_hi[nib];
    }
    return {lo, hi};
}
#endif

} // namespace detail

// GF(2^64) = GF(2)[y]/(y^64 + y^4 + y^3 + y + 1), one word per element; the
// bits of the word are the polynomial coefficients, so GF(2) embeds as {0,1}
// and the coefficient slices of a vector over this field are GF(2) vectors.
class Gf2e64 {
public:
    static constexpr std::uint64_t modulus_low = 0x1BULL; // y^4 + y^3 + y + 1

    constexpr Gf2e64() = default;
    constexpr explicit Gf2e64(std::uint64_t v) : v_(v) {}

    static constexpr Gf2e64 zero() { return Gf2e64(0); }
    static constexpr Gf2e64 one() { return Gf2e64(1); }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool get_coeff(unsigned c) const { return (v_ >> c) & 1u; }

    friend Gf2e64 operator+(Gf2e64 a, Gf2e64 b) { return Gf2e64(a.v_ ^ b.v_); }
    friend Gf2e64 operator-(Gf2e64 a, Gf2e64 b) { return Gf2e64(a.v_ ^ b.v_); }
    Gf2e64& operator+=(Gf2e64 o) {
        v_ ^= o.v_;
        return *this;
    }

    friend Gf2e64 operator*(Gf2e64 a, Gf2e64 b) {
        detail::Clmul128 p = detail::clmul64(a.v_, b.v_);
        return Gf2e64(reduce(p.lo, p.hi));
    }
    Gf2e64& operator*=(Gf2e64 o) {
        *this = *this * o;
        return *this;
    }

    Gf2e64 squared() const { return *this * *this; }

    // a^(2^64 - 2) by square-and-multiply; the exponent is 63 ones then a zero.
    Gf2e64 inverse() const {
        Gf2e64 acc = one();
        Gf2e64 sq = *this;
        for (int i = 0; i < 63; ++i) {
            sq = sq.squared();
            acc *= sq;
        }
        return acc;
    }

    bool operator==(const Gf2e64&) const = default;

private:
    // hi*y^64 + lo mod f: fold hi through y^64 = y^4+y^3+y+1 twice (the second
    // fold's high part has degree <= 3, so it lands entirely in the low word).
    static std::uint64_t reduce(std::uint64_t lo, std::uint64_t hi) {
        detail::Clmul128 f1 = detail::clmul64(hi, modulus_low);
        detail::Clmul128 f2 = detail::clmul64(f1.hi, modulus_low);
        return lo ^ f1.lo ^ f2.lo;
    }

    std::uint64_t v_ = 0;
};

} // namespace mqsolve
