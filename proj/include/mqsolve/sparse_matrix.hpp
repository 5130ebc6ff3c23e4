#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mqsolve/bitmatrix.hpp"
#include "mqsolve/bitvec.hpp"

namespace mqsolve {

// Sparse GF(2) matrix, per-row sorted column lists. This is the black-box
// side of the house: it only ever gets applied to vectors.
struct SparseGF2Matrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<std::vector<std::uint32_t>> rows;

    SparseGF2Matrix() = default;
    SparseGF2Matrix(std::size_t r, std::size_t c) : n_rows(r), n_cols(c), rows(r) {}

    std::size_t nnz() const {
        std::size_t s = 0;
        for (const auto& row : rows) s += row.size();
        return s;
    }

    void check() const {
        for (const auto& row : rows) {
            std::uint32_t prev = 0;
            bool first = true;
            for (std::uint32_t c : row) {
                if (c >= n_cols) throw std::invalid_argument("SparseGF2Matrix: column out of range");
                if (!first && c <= prev) throw std::invalid_argument("SparseGF2Matrix: columns not increasing");
                prev = c;
                first = false;
            }
        }
    }

    // y = M x over GF(2) for packed vectors.
    BitVec apply_bits(const BitVec& x) const {
        if (x.size() != n_cols) throw std::invalid_argument("apply_bits: dimension mismatch");
        BitVec y(n_rows);
        for (std::size_t i = 0; i < n_rows; ++i) {
            unsigned acc = 0;
            for (std::uint32_t c : rows[i]) acc ^= x.get(c) ? 1u : 0u;
            if (acc) y.set(i, true);
        }
        return y;
    }

    // y = M^t u over GF(2).
    BitVec apply_transpose_bits(const BitVec& u) const {
        if (u.size() != n_rows) throw std::invalid_argument("apply_transpose_bits: dimension mismatch");
        BitVec y(n_cols);
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (!u.get(i)) continue;
            for (std::uint32_t c : rows[i]) y.flip(c);
        }
        return y;
    }

    BitMatrix to_dense() const { return BitMatrix::from_sparse_rows(n_rows, n_cols, rows); }
};

} // namespace mqsolve
