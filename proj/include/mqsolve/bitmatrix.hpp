#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mqsolve/bitvec.hpp"

namespace mqsolve {

// Dense GF(2) matrix, one bit per entry, row-major packed words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_words_((cols + 63) / 64), words_(rows * row_words_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMatrix from_sparse_rows(std::size_t rows, std::size_t cols,
                                      const std::vector<std::vector<std::uint32_t>>& sparse) {
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < sparse.size(); ++r)
            for (std::uint32_t c : sparse[r]) m.set(r, c, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t row_words() const { return row_words_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * row_words_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (c & 63);
        std::uint64_t& w = words_[r * row_words_ + (c >> 6)];
        if (v) {
            w |= mask;
        } else {
            w &= ~mask;
        }
    }

    const std::uint64_t* row_ptr(std::size_t r) const { return words_.data() + r * row_words_; }
    std::uint64_t* row_ptr(std::size_t r) { return words_.data() + r * row_words_; }

    void xor_rows(std::size_t dst, std::size_t src) {
        std::uint64_t* d = row_ptr(dst);
        const std::uint64_t* s = row_ptr(src);
        for (std::size_t w = 0; w < row_words_; ++w) d[w] ^= s[w];
    }

    bool row_is_zero(std::size_t r) const {
        const std::uint64_t* p = row_ptr(r);
        for (std::size_t w = 0; w < row_words_; ++w)
            if (p[w]) return false;
        return true;
    }

    BitVec row(std::size_t r) const {
        BitVec v(cols_);
        const std::uint64_t* p = row_ptr(r);
        for (std::size_t w = 0; w < row_words_; ++w) v.words()[w] = p[w];
        return v;
    }

    void set_row(std::size_t r, const BitVec& v) {
        if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: width mismatch");
        std::uint64_t* p = row_ptr(r);
        for (std::size_t w = 0; w < row_words_; ++w) p[w] = v.word(w);
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            const std::uint64_t* p = row_ptr(r);
            for (std::size_t w = 0; w < row_words_; ++w) {
                std::uint64_t word = p[w];
                while (word) {
                    auto b = static_cast<std::size_t>(std::countr_zero(word));
                    t.set((w << 6) + b, r, true);
                    word &= word - 1;
                }
            }
        }
        return t;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, row_words_ = 0;
    std::vector<std::uint64_t> words_;
};

// u * M for a row vector u of length M.rows().
inline BitVec mul_left(const BitVec& u, const BitMatrix& m) {
    if (u.size() != m.rows()) throw std::invalid_argument("mul_left: dimension mismatch");
    BitVec out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!u.get(r)) continue;
        const std::uint64_t* p = m.row_ptr(r);
        for (std::size_t w = 0; w < m.row_words(); ++w) out.words()[w] ^= p[w];
    }
    return out;
}

// Reduced row echelon form together with the row transform: every echelon row
// is the recorded GF(2) combination of input rows (echelon = transform * M).
struct EchelonForm {
    BitMatrix echelon;
    BitMatrix transform;
    std::vector<std::size_t> pivot_cols; // one per echelon row, in order
    std::size_t rank = 0;
};

inline EchelonForm rref(const BitMatrix& input) {
    EchelonForm ef;
    ef.echelon = input;
    ef.transform = BitMatrix::identity(input.rows());
    std::size_t rows = input.rows(), cols = input.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && !ef.echelon.get(pivot, c)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t w = 0; w < ef.echelon.row_words(); ++w)
                std::swap(ef.echelon.row_ptr(rank)[w], ef.echelon.row_ptr(pivot)[w]);
            for (std::size_t w = 0; w < ef.transform.row_words(); ++w)
                std::swap(ef.transform.row_ptr(rank)[w], ef.transform.row_ptr(pivot)[w]);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && ef.echelon.get(r, c)) {
                ef.echelon.xor_rows(r, rank);
                ef.transform.xor_rows(r, rank);
            }
        }
        ef.pivot_cols.push_back(c);
        ++rank;
    }
    ef.rank = rank;
    return ef;
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

// Left solve u * M = r via row-space membership: reduce r against the echelon
// rows and read the combination off the transform. The witness is verified by
// multiplication before it is returned.
inline std::optional<BitVec> solve_left(const BitMatrix& m, const BitVec& r) {
    if (r.size() != m.cols()) throw std::invalid_argument("solve_left: dimension mismatch");
    EchelonForm ef = rref(m);
    BitVec residue = r;
    BitVec combo(m.rows());
    for (std::size_t i = 0; i < ef.rank; ++i) {
        if (residue.get(ef.pivot_cols[i])) {
            residue ^= ef.echelon.row(i);
            combo ^= ef.transform.row(i);
        }
    }
    if (!residue.is_zero()) return std::nullopt;
    if (!(mul_left(combo, m) == r)) throw std::logic_error("solve_left: witness failed verification");
    return combo;
}

} // namespace mqsolve
