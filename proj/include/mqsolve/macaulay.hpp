#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "mqsolve/bitvec.hpp"
#include "mqsolve/monomials.hpp"
#include "mqsolve/quadratic.hpp"
#include "mqsolve/sparse_matrix.hpp"

namespace mqsolve {

// varphi(t * f): multiply a quadratic polynomial by a squarefree monomial and
// reduce modulo the field equations, i.e. take unions of variable sets.
// Distinct monomials of f may collide after reduction and cancel in pairs.
inline std::vector<std::uint32_t> phi_multiply(MonomialMask t, const QuadraticPoly& f, const MonomialIndex& idx) {
    std::vector<std::uint32_t> cols;
    std::size_t qc = f.quad_count();
    for (std::size_t b = 0; b < qc; ++b) {
        if (!f.coeffs().get(b)) continue;
        unsigned i, j;
        QuadraticPoly::decode_pair(b, i, j);
        MonomialMask mono = t | (MonomialMask{1} << i) | (MonomialMask{1} << j);
        cols.push_back(static_cast<std::uint32_t>(idx.rank(mono)));
    }
    for (unsigned i = 0; i < f.n(); ++i)
        if (f.linear(i)) cols.push_back(static_cast<std::uint32_t>(idx.rank(t | (MonomialMask{1} << i))));
    if (f.constant()) cols.push_back(static_cast<std::uint32_t>(idx.rank(t)));
    std::sort(cols.begin(), cols.end());
    // XOR semantics: equal column indices cancel pairwise
    std::vector<std::uint32_t> out;
    for (std::size_t p = 0; p < cols.size();) {
        std::size_t q = p;
        while (q < cols.size() && cols[q] == cols[p]) ++q;
        if ((q - p) & 1) out.push_back(cols[p]);
        p = q;
    }
    return out;
}

// Boolean Macaulay matrix in degree d: one row per pair (f_j, t) with t a
// squarefree monomial of degree at most d-2, rows ordered j ascending then t
// descending grevlex, columns the squarefree monomials of degree at most d in
// descending grevlex. Rows that cancel to zero are kept so the dimensions
// match the counting formulas exactly.
class MacaulayMatrix {
public:
    MacaulayMatrix(const QuadraticSystem& s, unsigned d)
        : d_(d), m_(s.m()), col_index_(s.n, d), row_index_(s.n, d >= 2 ? d - 2 : 0) {
        if (d < 2) throw std::invalid_argument("MacaulayMatrix: d >= 2 required");
        rows_per_poly_ = row_index_.count();
        mat_.n_rows = static_cast<std::size_t>(m_) * rows_per_poly_;
        mat_.n_cols = col_index_.count();
        mat_.rows.reserve(mat_.n_rows);
        for (unsigned j = 0; j < m_; ++j)
            for (std::uint64_t r = 0; r < rows_per_poly_; ++r)
                mat_.rows.push_back(phi_multiply(row_index_.unrank(r), s.polys[j], col_index_));
    }

    unsigned degree() const { return d_; }
    std::size_t n_rows() const { return mat_.n_rows; }
    std::size_t n_cols() const { return mat_.n_cols; }
    const SparseGF2Matrix& sparse() const { return mat_; }
    const MonomialIndex& columns() const { return col_index_; }
    const MonomialIndex& multipliers() const { return row_index_; }

    // Which product phi(t * f_j) a row holds.
    struct Provenance {
        unsigned poly;
        MonomialMask multiplier;
    };
    Provenance provenance(std::size_t row) const {
        return {static_cast<unsigned>(row / rows_per_poly_), row_index_.unrank(row % rows_per_poly_)};
    }

    // Right-hand side of the consistency test: a single 1 in the column of
    // the constant monomial (the last one).
    BitVec rhs() const {
        BitVec r(mat_.n_cols);
        r.set(col_index_.constant_column(), true);
        return r;
    }

    // Triplet text dump, 1-based, for external inspection.
    void write_sms(std::ostream& os) const {
        os << mat_.n_rows << " " << mat_.n_cols << " 2\n";
        for (std::size_t r = 0; r < mat_.n_rows; ++r)
            for (std::uint32_t c : mat_.rows[r]) os << (r + 1) << " " << (c + 1) << " 1\n";
    }

private:
    unsigned d_;
    unsigned m_;
    std::uint64_t rows_per_poly_ = 0;
    MonomialIndex col_index_;
    MonomialIndex row_index_;
    SparseGF2Matrix mat_;
};

// Standalone right-hand-side builder matching a column index.
inline BitVec rhs_vector(const MonomialIndex& idx) {
    BitVec r(idx.count());
    r.set(idx.constant_column(), true);
    return r;
}

} // namespace mqsolve
