#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "mqsolve/berlekamp_massey.hpp"
#include "mqsolve/bitvec.hpp"
#include "mqsolve/gf2_64.hpp"
#include "mqsolve/rng.hpp"
#include "mqsolve/sparse_matrix.hpp"

namespace mqsolve {

enum class ConsistencyStatus {
    consistent,        // solution x with A x = b, verified over GF(2)
    inconsistent,      // certificate u with u^t A = 0 and u^t b = 1, verified
    retries_exhausted, // no verified witness within the attempt budget
};

struct WiedemannStats {
    std::uint64_t applies = 0;
    std::uint64_t transpose_applies = 0;
    unsigned attempts = 0;
};

struct ConsistencyOutcome {
    ConsistencyStatus status = ConsistencyStatus::retries_exhausted;
    BitVec solution;    // length n_cols when consistent
    BitVec certificate; // length n_rows when inconsistent
    WiedemannStats stats;
};

struct WiedemannOptions {
    unsigned max_attempts = 8;
};

namespace detail {

using FieldVec = std::vector<Gf2e64>;

inline Gf2e64 random_element(SplitMix64& rng) { return Gf2e64(rng.next()); }
inline Gf2e64 random_nonzero(SplitMix64& rng) {
    std::uint64_t v;
    do {
        v = rng.next();
    } while (v == 0);
    return Gf2e64(v);
}

inline FieldVec random_vector(SplitMix64& rng, std::size_t n) {
    FieldVec v(n);
    for (auto& e : v) e = random_element(rng);
    return v;
}

inline Gf2e64 dot(const FieldVec& a, const FieldVec& b) {
    Gf2e64 acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline void axpy(FieldVec& y, Gf2e64 c, const FieldVec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

// Banded triangular Toeplitz times a random diagonal. The sandwich uses an
// upper factor on the left of the matrix and a lower factor on the right
// (plus the diagonals), which generically gives the preconditioned matrix a
// one-dimensional nilpotent part, so minimal polynomials split as lambda^s h
// with s <= 1 and both witness extractions go through. The matrix itself has
// GF(2) entries and costs only XORs; all multiplications live here.
struct Preconditioner {
    FieldVec diag;
    FieldVec band; // band[0] != 0
    bool upper = false;

    static Preconditioner draw(SplitMix64& rng, std::size_t n, bool upper, std::size_t width) {
        Preconditioner p;
        p.upper = upper;
        p.diag.resize(n);
        for (auto& e : p.diag) e = random_nonzero(rng);
        p.band.resize(std::min(n, width));
        p.band[0] = random_nonzero(rng);
        for (std::size_t i = 1; i < p.band.size(); ++i) p.band[i] = random_element(rng);
        return p;
    }

    FieldVec conv(const FieldVec& v, bool up) const {
        std::size_t n = diag.size();
        FieldVec out(n);
        for (std::size_t i = 0; i < n; ++i) {
            Gf2e64 acc;
            std::size_t w = up ? std::min(band.size(), n - i) : std::min(band.size(), i + 1);
            if (up) {
                for (std::size_t s = 0; s < w; ++s) acc += band[s] * v[i + s];
            } else {
                for (std::size_t s = 0; s < w; ++s) acc += band[s] * v[i - s];
            }
            out[i] = acc;
        }
        return out;
    }

    // T D v
    FieldVec forward(const FieldVec& v) const {
        FieldVec t(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) t[i] = diag[i] * v[i];
        return conv(t, upper);
    }

    // (T D)^t v = D T^t v; the transpose of an upper band is the lower one
    FieldVec transposed(const FieldVec& v) const {
        FieldVec t = conv(v, !upper);
        for (std::size_t i = 0; i < diag.size(); ++i) t[i] = diag[i] * t[i];
        return t;
    }
};

// Black box for the preconditioned square system B = L A R (padded to N x N).
struct PreconditionedBox {
    const SparseGF2Matrix* a;
    std::size_t n;
    Preconditioner left, right;
    WiedemannStats* stats;

    FieldVec apply(const FieldVec& x) const {
        ++stats->applies;
        FieldVec rx = right.forward(x);
        FieldVec y(n);
        for (std::size_t i = 0; i < a->n_rows; ++i) {
            std::uint64_t acc = 0;
            for (std::uint32_t c : a->rows[i]) acc ^= rx[c].value();
            y[i] = Gf2e64(acc);
        }
        return left.forward(y);
    }

    FieldVec apply_transpose(const FieldVec& u) const {
        ++stats->transpose_applies;
        FieldVec lu = left.transposed(u);
        FieldVec y(n);
        for (std::size_t i = 0; i < a->n_rows; ++i) {
            Gf2e64 ui = lu[i];
            if (ui.is_zero()) continue;
            for (std::uint32_t c : a->rows[i]) y[c] += ui;
        }
        return right.transposed(y);
    }
};

// Krylov sequence u^t B^i v of the given length (forward or transposed box).
template <typename Apply>
inline std::vector<Gf2e64> krylov_sequence(const FieldVec& u, FieldVec v, std::size_t len, Apply&& apply) {
    std::vector<Gf2e64> seq;
    seq.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        seq.push_back(dot(u, v));
        if (i + 1 < len) v = apply(v);
    }
    return seq;
}

// sum_{i=1..deg} f_i B^{i-1} v by Horner.
template <typename Apply>
inline FieldVec shifted_poly_eval(const std::vector<Gf2e64>& f, const FieldVec& v, Apply&& apply) {
    std::size_t deg = f.size() - 1;
    FieldVec acc(v.size());
    if (deg == 0) return acc;
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] = f[deg] * v[i];
    for (std::size_t i = deg; i-- > 1;) {
        acc = apply(acc);
        axpy(acc, f[i], v);
    }
    return acc;
}

} // namespace detail

// Las Vegas consistency test for A x = b over GF(2), A given by black boxes,
// b a GF(2) vector of length n_rows. Rectangular A is padded square
// internally; the returned witnesses are always re-verified over GF(2), so
// randomness only affects the running time and which witness is found.
inline ConsistencyOutcome test_consistency(const SparseGF2Matrix& a, const BitVec& b, SplitMix64& rng,
                                           const WiedemannOptions& opts = {}) {
    if (b.size() != a.n_rows) throw std::invalid_argument("test_consistency: rhs dimension mismatch");
    ConsistencyOutcome out;
    if (b.is_zero()) {
        out.status = ConsistencyStatus::consistent;
        out.solution = BitVec(a.n_cols);
        return out;
    }
    std::size_t n = std::max(a.n_rows, a.n_cols);
    std::size_t q = std::min(a.n_rows, a.n_cols);
    std::size_t seq_len = 2 * q + 6; // minimal polynomials have degree <= rank+1 <= q+1

    detail::FieldVec b_field(n);
    for (std::size_t i = 0; i < a.n_rows; ++i)
        if (b.get(i)) b_field[i] = Gf2e64::one();

    for (unsigned attempt = 0; attempt < opts.max_attempts; ++attempt) {
        out.stats.attempts = attempt + 1;
        // widen the Toeplitz band if the cheap rounds keep failing
        std::size_t width = attempt < 4 ? 16 : 64;
        detail::PreconditionedBox box{&a, n, detail::Preconditioner::draw(rng, n, /*upper=*/true, width),
                                      detail::Preconditioner::draw(rng, n, /*upper=*/false, width), &out.stats};
        detail::FieldVec b_tilde = box.left.forward(b_field);

        // --- solve attempt: minimal polynomial of v = b~ + B r ---
        detail::FieldVec r = detail::random_vector(rng, n);
        detail::FieldVec v = box.apply(r);
        for (std::size_t i = 0; i < n; ++i) v[i] += b_tilde[i];
        detail::FieldVec u = detail::random_vector(rng, n);
        auto fwd = [&box](const detail::FieldVec& x) { return box.apply(x); };
        std::vector<Gf2e64> f = berlekamp_massey(detail::krylov_sequence(u, v, seq_len, fwd));
        if (!f[0].is_zero()) {
            detail::FieldVec acc = detail::shifted_poly_eval(f, v, fwd);
            Gf2e64 inv0 = f[0].inverse();
            for (std::size_t i = 0; i < n; ++i) acc[i] = inv0 * acc[i] + r[i];
            detail::FieldVec x_field = box.right.forward(acc);
            BitVec x(a.n_cols);
            for (std::size_t i = 0; i < a.n_cols; ++i)
                if (x_field[i].get_coeff(0)) x.set(i, true);
            if (a.apply_bits(x) == b) {
                out.status = ConsistencyStatus::consistent;
                out.solution = std::move(x);
                return out;
            }
            continue; // sequence too short or unlucky projection
        }

        // --- certificate attempt: left kernel vector of B hitting b~ ---
        auto bwd = [&box](const detail::FieldVec& x) { return box.apply_transpose(x); };
        detail::FieldVec z = detail::random_vector(rng, n);
        detail::FieldVec u2 = detail::random_vector(rng, n);
        std::vector<Gf2e64> g = berlekamp_massey(detail::krylov_sequence(u2, z, seq_len, bwd));
        std::size_t s = 0;
        while (s < g.size() && g[s].is_zero()) ++s;
        if (s == 0 || s >= g.size()) continue; // g(0) != 0: no kernel direction from this z
        std::vector<Gf2e64> h(g.begin() + static_cast<std::ptrdiff_t>(s), g.end());
        // w = h(B^t) (B^t)^{s-1} z
        detail::FieldVec w = z;
        for (std::size_t i = 0; i + 1 < s; ++i) w = bwd(w);
        {
            detail::FieldVec acc(n);
            for (std::size_t i = 0; i < n; ++i) acc[i] = h.back() * w[i];
            for (std::size_t i = h.size() - 1; i-- > 0;) {
                acc = bwd(acc);
                detail::axpy(acc, h[i], w);
            }
            w = std::move(acc);
        }
        Gf2e64 sigma = detail::dot(w, b_tilde);
        if (sigma.is_zero()) continue;
        // every coefficient slice of L^t w annihilates A; sigma tells which
        // slice also hits b
        unsigned coeff = static_cast<unsigned>(std::countr_zero(sigma.value()));
        detail::FieldVec u_field = box.left.transposed(w);
        BitVec cert(a.n_rows);
        for (std::size_t i = 0; i < a.n_rows; ++i)
            if (u_field[i].get_coeff(coeff)) cert.set(i, true);
        if (a.apply_transpose_bits(cert).is_zero() && cert.dot(b)) {
            out.status = ConsistencyStatus::inconsistent;
            out.certificate = std::move(cert);
            return out;
        }
    }
    out.status = ConsistencyStatus::retries_exhausted;
    return out;
}

// The solver wants left systems u M = r; run the test on the transpose black
// box. "consistent" here means a left witness u exists.
struct LeftSolveOutcome {
    ConsistencyStatus status = ConsistencyStatus::retries_exhausted;
    BitVec left_witness;       // u with u M = r
    BitVec no_solution_proof;  // w with M w = 0 and r . w = 1
    WiedemannStats stats;
};

inline LeftSolveOutcome solve_left_lasvegas(const SparseGF2Matrix& m, const BitVec& r, SplitMix64& rng,
                                            const WiedemannOptions& opts = {}) {
    SparseGF2Matrix t(m.n_cols, m.n_rows);
    for (std::size_t i = 0; i < m.n_rows; ++i)
        for (std::uint32_t c : m.rows[i]) t.rows[c].push_back(static_cast<std::uint32_t>(i));
    ConsistencyOutcome res = test_consistency(t, r, rng, opts);
    LeftSolveOutcome out;
    out.status = res.status;
    out.stats = res.stats;
    if (res.status == ConsistencyStatus::consistent) {
        out.left_witness = std::move(res.solution);
    } else if (res.status == ConsistencyStatus::inconsistent) {
        out.no_solution_proof = std::move(res.certificate);
    }
    return out;
}

} // namespace mqsolve
