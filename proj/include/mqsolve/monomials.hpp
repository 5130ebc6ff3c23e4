#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mqsolve {

// Squarefree monomials over variables x1..x_nv are stored as 64-bit masks,
// bit i (0-based) = x_{i+1}. This caps nv at 64, far beyond any matrix that
// can actually be built.
using MonomialMask = std::uint64_t;

// Bijection between the squarefree monomials of degree <= d and the column
// range 0..count()-1, in descending grevlex with x1 > x2 > ... > x_nv.
//
// Descending grevlex sorts by total degree (high first) and, within a degree,
// ascending colexicographically on the variable-index sets: at the highest
// variable where two monomials differ, the one *without* that variable is
// larger. Index 0 is therefore the grevlex-largest monomial and the constant
// monomial 1 sits in the last column.
class MonomialIndex {
public:
    MonomialIndex(unsigned nv, unsigned d) : nv_(nv), d_(d) {
        if (nv > 64) throw std::invalid_argument("MonomialIndex: nv > 64 unsupported");
        if (d > nv) d_ = nv; // no squarefree monomials above degree nv
        binom_.assign(nv + 1, std::vector<std::uint64_t>(d_ + 1, 0));
        for (unsigned i = 0; i <= nv; ++i) {
            binom_[i][0] = 1;
            for (unsigned j = 1; j <= d_ && j <= i; ++j)
                binom_[i][j] = binom_[i - 1][j - 1] + (j <= i - 1 ? binom_[i - 1][j] : 0);
        }
        // offset_[k] = first column of the degree-k block (blocks descend in degree)
        offset_.assign(d_ + 2, 0);
        std::uint64_t acc = 0;
        for (unsigned k = d_ + 1; k-- > 0;) {
            offset_[k] = acc;
            acc += binom_[nv][k];
        }
        count_ = acc;
        if (count_ > (std::uint64_t{1} << 40))
            throw std::invalid_argument("MonomialIndex: column count exceeds scale cap");
    }

    unsigned nv() const { return nv_; }
    unsigned max_degree() const { return d_; }
    std::uint64_t count() const { return count_; }
    std::uint64_t count_degree(unsigned k) const { return k <= d_ ? binom_[nv_][k] : 0; }
    std::uint64_t binom(unsigned n, unsigned k) const { return k <= d_ && n <= nv_ ? binom_[n][k] : 0; }

    std::uint64_t constant_column() const { return count_ - 1; }

    std::uint64_t rank(MonomialMask mono) const {
        unsigned k = static_cast<unsigned>(std::popcount(mono));
        if (k > d_) throw std::invalid_argument("MonomialIndex::rank: degree exceeds index bound");
        // colex rank: sum C(position, t) over the t-th smallest variable position
        std::uint64_t r = 0;
        unsigned t = 1;
        while (mono) {
            unsigned pos = static_cast<unsigned>(std::countr_zero(mono));
            r += binom_[pos][t] /* C(pos, t), zero when pos < t */;
            mono &= mono - 1;
            ++t;
        }
        return offset_[k] + r;
    }

    MonomialMask unrank(std::uint64_t col) const {
        if (col >= count_) throw std::out_of_range("MonomialIndex::unrank: column out of range");
        unsigned k = d_;
        while (col >= offset_[k] + binom_[nv_][k]) --k; // blocks are contiguous
        std::uint64_t c = col - offset_[k];
        MonomialMask mono = 0;
        for (unsigned t = k; t >= 1; --t) {
            // largest position p with C(p, t) <= c
            unsigned p = t - 1;
            while (p + 1 < nv_ && binom_[p + 1][t] <= c) ++p;
            mono |= MonomialMask{1} << p;
            c -= binom_[p][t];
        }
        return mono;
    }

private:
    unsigned nv_;
    unsigned d_;
    std::uint64_t count_ = 0;
    std::vector<std::vector<std::uint64_t>> binom_;
    std::vector<std::uint64_t> offset_;
};

// Grevlex comparison on squarefree monomials, usable as an ordering oracle:
// returns true when a > b.
inline bool grevlex_greater(MonomialMask a, MonomialMask b) {
    int da = std::popcount(a), db = std::popcount(b);
    if (da != db) return da > db;
    // at the highest differing variable, the monomial lacking it wins
    MonomialMask diff = a ^ b;
    if (diff == 0) return false;
    int hi = 63 - std::countl_zero(diff);
    return !(a >> hi & 1);
}

} // namespace mqsolve
