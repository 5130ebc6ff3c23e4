#pragma once

#include <cstddef>
#include <vector>

#include "mqsolve/gf2_64.hpp"

namespace mqsolve {

// Berlekamp-Massey over GF(2^64): lowest-degree monic polynomial
// c_0 + c_1 y + ... + c_{L-1} y^{L-1} + y^L annihilating the sequence as a
// linear recurrence, i.e. sum_i c_i s_{k+i} = 0 (with c_L = 1) for every
// window the input determines. Returned as coefficients c_0..c_L ascending.
inline std::vector<Gf2e64> berlekamp_massey(const std::vector<Gf2e64>& seq) {
    std::vector<Gf2e64> c{Gf2e64::one()}; // current connection polynomial, ascending, c[L]=1 at the end
    std::vector<Gf2e64> b{Gf2e64::one()}; // previous candidate
    std::size_t l = 0, m = 1;
    Gf2e64 last_disc = Gf2e64::one();
    for (std::size_t nidx = 0; nidx < seq.size(); ++nidx) {
        // discrepancy d = s_n + sum_{i=1..L} c_{L-i} ... in the reversed view;
        // with c stored reversed (c[0] = highest), use the classic form:
        Gf2e64 d = seq[nidx];
        for (std::size_t i = 1; i < c.size(); ++i) d += c[i] * seq[nidx - i];
        if (d.is_zero()) {
            ++m;
        } else if (2 * l <= nidx) {
            std::vector<Gf2e64> t = c;
            Gf2e64 coef = d * last_disc.inverse();
            if (c.size() < b.size() + m) c.resize(b.size() + m);
            for (std::size_t i = 0; i < b.size(); ++i) c[i + m] += coef * b[i];
            l = nidx + 1 - l;
            b = std::move(t);
            last_disc = d;
            m = 1;
        } else {
            Gf2e64 coef = d * last_disc.inverse();
            if (c.size() < b.size() + m) c.resize(b.size() + m);
            for (std::size_t i = 0; i < b.size(); ++i) c[i + m] += coef * b[i];
            ++m;
        }
    }
    // here c[0] = 1 and c[i] multiplies s_{n-i}: s_n = sum_{i>=1} c_i s_{n-i}
    // flip to the ascending-annihilator convention sum_j a_j s_{k+j} = 0
    std::vector<Gf2e64> out(l + 1);
    for (std::size_t i = 0; i <= l; ++i) out[l - i] = i < c.size() ? c[i] : Gf2e64::zero();
    return out;
}

// Check that a candidate annihilator regenerates the sequence.
inline bool annihilates(const std::vector<Gf2e64>& poly, const std::vector<Gf2e64>& seq) {
    if (poly.empty()) return false;
    std::size_t deg = poly.size() - 1;
    for (std::size_t k = 0; k + deg < seq.size(); ++k) {
        Gf2e64 acc = Gf2e64::zero();
        for (std::size_t i = 0; i <= deg; ++i) acc += poly[i] * seq[k + i];
        if (!acc.is_zero()) return false;
    }
    return true;
}

} // namespace mqsolve
