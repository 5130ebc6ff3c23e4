#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mqsolve/bitvec.hpp"
#include "mqsolve/rng.hpp"

namespace mqsolve {

// A point of GF(2)^n; bit i is the value of x_{i+1}.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(unsigned n) : n_(n), bits_(n) {}
    Assignment(unsigned n, std::uint64_t mask) : n_(n), bits_(n) {
        if (n > 64) throw std::invalid_argument("Assignment: mask constructor needs n <= 64");
        for (unsigned i = 0; i < n; ++i) bits_.set(i, (mask >> i) & 1u);
    }

    unsigned n() const { return n_; }
    bool get(unsigned i) const { return bits_.get(i); }
    void set(unsigned i, bool v) { bits_.set(i, v); }

    // Integer encoding with x1 as least significant bit (n <= 64).
    std::uint64_t as_mask() const {
        if (n_ > 64) throw std::invalid_argument("Assignment::as_mask: n > 64");
        std::uint64_t m = 0;
        for (unsigned i = 0; i < n_; ++i)
            if (bits_.get(i)) m |= std::uint64_t{1} << i;
        return m;
    }

    bool operator==(const Assignment& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    unsigned n_ = 0;
    BitVec bits_;
};

// Reduced quadratic polynomial over GF(2): no square ever appears, so the
// coefficient vector runs over {x_i x_j : i<j} + {x_i} + {1}, packed in
// descending grevlex. The quadratic block is colex on the (i,j) pairs,
// which matches the Macaulay column order for degree 2.
class QuadraticPoly {
public:
    QuadraticPoly() = default;
    explicit QuadraticPoly(unsigned n) : n_(n), coeffs_(num_coeffs(n)) {}

    static std::size_t num_coeffs(unsigned n) {
        return static_cast<std::size_t>(n) * (n - 1) / 2 + n + 1;
    }

    unsigned n() const { return n_; }
    const BitVec& coeffs() const { return coeffs_; }
    BitVec& coeffs() { return coeffs_; }

    // Coefficient slots, 0-based variables i < j.
    std::size_t quad_index(unsigned i, unsigned j) const {
        return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
    }
    std::size_t linear_index(unsigned i) const { return quad_count() + i; }
    std::size_t constant_index() const { return quad_count() + n_; }
    std::size_t quad_count() const { return static_cast<std::size_t>(n_) * (n_ - 1) / 2; }

    bool quad(unsigned i, unsigned j) const { return coeffs_.get(quad_index(i, j)); }
    bool linear(unsigned i) const { return coeffs_.get(linear_index(i)); }
    bool constant() const { return coeffs_.get(constant_index()); }

    void set_quad(unsigned i, unsigned j, bool v) { coeffs_.set(quad_index(i, j), v); }
    void set_linear(unsigned i, bool v) { coeffs_.set(linear_index(i), v); }
    void set_constant(bool v) { coeffs_.set(constant_index(), v); }

    bool is_zero() const { return coeffs_.is_zero(); }

    void operator^=(const QuadraticPoly& o) {
        if (o.n_ != n_) throw std::invalid_argument("QuadraticPoly xor: variable count mismatch");
        coeffs_ ^= o.coeffs_;
    }

    // Decode a quadratic-block slot back to its pair (i, j).
    static void decode_pair(std::size_t idx, unsigned& i, unsigned& j) {
        auto jj = static_cast<unsigned>((1.0 + std::sqrt(8.0 * static_cast<double>(idx) + 1.0)) / 2.0);
        while (static_cast<std::size_t>(jj) * (jj - 1) / 2 > idx) --jj;
        while (static_cast<std::size_t>(jj + 1) * jj / 2 <= idx) ++jj;
        j = jj;
        i = static_cast<unsigned>(idx - static_cast<std::size_t>(jj) * (jj - 1) / 2);
    }

    bool evaluate(const Assignment& a) const {
        if (a.n() != n_) throw std::invalid_argument("QuadraticPoly::evaluate: width mismatch");
        bool acc = constant();
        for (unsigned i = 0; i < n_; ++i)
            if (linear(i) && a.get(i)) acc = !acc;
        std::size_t qc = quad_count();
        for (std::size_t idx = 0; idx < qc; ++idx) {
            if (!coeffs_.get(idx)) continue;
            unsigned i, j;
            decode_pair(idx, i, j);
            if (a.get(i) && a.get(j)) acc = !acc;
        }
        return acc;
    }

    // Substitute the last k variables with the given values and reduce to the
    // basis on the remaining n-k variables.
    QuadraticPoly specialize(const std::vector<bool>& tail) const {
        auto k = static_cast<unsigned>(tail.size());
        if (k >= n_) throw std::invalid_argument("QuadraticPoly::specialize: k >= n");
        unsigned l = n_ - k;
        QuadraticPoly out(l);
        auto tail_bit = [&](unsigned v) { return static_cast<bool>(tail[v - l]); };
        if (constant()) out.set_constant(!out.constant());
        for (unsigned i = 0; i < n_; ++i) {
            if (!linear(i)) continue;
            if (i < l) {
                out.set_linear(i, !out.linear(i));
            } else if (tail_bit(i)) {
                out.set_constant(!out.constant());
            }
        }
        std::size_t qc = quad_count();
        for (std::size_t idx = 0; idx < qc; ++idx) {
            if (!coeffs_.get(idx)) continue;
            unsigned i, j;
            decode_pair(idx, i, j);
            if (j < l) {
                out.set_quad(i, j, !out.quad(i, j));
            } else if (i < l) {
                if (tail_bit(j)) out.set_linear(i, !out.linear(i));
            } else if (tail_bit(i) && tail_bit(j)) {
                out.set_constant(!out.constant());
            }
        }
        return out;
    }

    bool operator==(const QuadraticPoly& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

private:
    unsigned n_ = 0;
    BitVec coeffs_;
};

struct QuadraticSystem {
    unsigned n = 0;
    std::vector<QuadraticPoly> polys;

    unsigned m() const { return static_cast<unsigned>(polys.size()); }

    QuadraticSystem() = default;
    QuadraticSystem(unsigned n_, std::vector<QuadraticPoly> polys_) : n(n_), polys(std::move(polys_)) {
        if (n < 1 || polys.empty()) throw std::invalid_argument("QuadraticSystem: need n >= 1, m >= 1");
        for (const auto& p : polys)
            if (p.n() != n) throw std::invalid_argument("QuadraticSystem: mixed variable counts");
    }

    QuadraticSystem specialize(const std::vector<bool>& tail) const {
        std::vector<QuadraticPoly> out;
        out.reserve(polys.size());
        for (const auto& p : polys) out.push_back(p.specialize(tail));
        return QuadraticSystem(n - static_cast<unsigned>(tail.size()), std::move(out));
    }
};

// Uniform random system: every coefficient is an independent fair bit, drawn
// from the splitmix64 stream in serialization order (poly 1 first, within a
// poly descending grevlex, stream words consumed LSB-first).
inline QuadraticSystem random_system(unsigned n, unsigned m, std::uint64_t seed) {
    if (n < 1 || m < 1) throw std::invalid_argument("random_system: need n, m >= 1");
    SplitMix64 rng(seed);
    std::vector<QuadraticPoly> polys;
    polys.reserve(m);
    for (unsigned j = 0; j < m; ++j) {
        QuadraticPoly p(n);
        std::size_t nc = QuadraticPoly::num_coeffs(n);
        for (std::size_t b = 0; b < nc; ++b) p.coeffs().set(b, rng.next_bit());
        polys.push_back(std::move(p));
    }
    return QuadraticSystem(n, std::move(polys));
}

// Word-packed evaluator for n <= 64; assignments are passed as masks.
// Quadratic terms are kept as per-variable masks of higher-indexed partners,
// so one evaluation costs a popcount per set bit of the point.
class PackedEval {
public:
    explicit PackedEval(const QuadraticPoly& p) : n_(p.n()) {
        if (n_ > 64) throw std::invalid_argument("PackedEval: n > 64");
        rows_.assign(n_, 0);
        for (unsigned i = 0; i < n_; ++i)
            if (p.linear(i)) lin_ |= std::uint64_t{1} << i;
        c_ = p.constant();
        std::size_t qc = p.quad_count();
        for (std::size_t idx = 0; idx < qc; ++idx) {
            if (!p.coeffs().get(idx)) continue;
            unsigned i, j;
            QuadraticPoly::decode_pair(idx, i, j);
            rows_[i] |= std::uint64_t{1} << j;
        }
    }

    bool evaluate(std::uint64_t a) const {
        std::uint64_t acc = c_ ? 1 : 0;
        acc ^= static_cast<std::uint64_t>(std::popcount(lin_ & a));
        std::uint64_t rest = a;
        while (rest) {
            unsigned i = static_cast<unsigned>(std::countr_zero(rest));
            acc ^= static_cast<std::uint64_t>(std::popcount(rows_[i] & a));
            rest &= rest - 1;
        }
        return acc & 1u;
    }

private:
    unsigned n_;
    bool c_ = false;
    std::uint64_t lin_ = 0;
    std::vector<std::uint64_t> rows_;
};

class PackedSystemEval {
public:
    explicit PackedSystemEval(const QuadraticSystem& s) : n_(s.n) {
        evals_.reserve(s.polys.size());
        for (const auto& p : s.polys) evals_.emplace_back(p);
    }

    unsigned n() const { return n_; }

    bool all_vanish(std::uint64_t a) const {
        for (const auto& e : evals_)
            if (e.evaluate(a)) return false;
        return true;
    }

private:
    unsigned n_;
    std::vector<PackedEval> evals_;
};

} // namespace mqsolve
