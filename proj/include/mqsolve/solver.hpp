#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mqsolve/asymptotic.hpp"
#include "mqsolve/bitmatrix.hpp"
#include "mqsolve/macaulay.hpp"
#include "mqsolve/quadratic.hpp"
#include "mqsolve/rng.hpp"
#include "mqsolve/series.hpp"
#include "mqsolve/wiedemann.hpp"

namespace mqsolve {

// Raised when a request exceeds the desk-scale enumeration caps.
class ScaleCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SolveMethod { dense_deterministic, sparse_lasvegas };

struct SolveConfig {
    std::optional<unsigned> k;  // specialized variables; default from optimal_gamma
    unsigned delta = 0;         // extra specialization, d0 still computed from k
    SolveMethod method = SolveMethod::dense_deterministic;
    std::optional<unsigned> d0_override; // >= 2; replaces the series-based degree
    std::uint64_t seed = 1;              // Las Vegas randomness root
    unsigned workers = 1;
    unsigned exhaustive_cap = 32; // max variables for any exhaustive enumeration
    bool collect_report = true;
};

struct SolutionSet {
    unsigned n = 0;
    std::vector<std::uint64_t> points; // ascending, x1 is the least significant bit

    bool contains(std::uint64_t p) const { return std::binary_search(points.begin(), points.end(), p); }
    std::size_t size() const { return points.size(); }
};

enum class BranchOutcome { pruned_with_certificate, searched, filter_inconclusive };

struct BranchRecord {
    std::uint64_t tail = 0;
    BranchOutcome outcome = BranchOutcome::searched;
    std::uint32_t solutions_found = 0;
    std::uint32_t matrix_rows = 0;
    std::uint32_t matrix_cols = 0;
    std::uint64_t matrix_nnz = 0;
    std::uint32_t rank = 0;            // dense path
    std::uint64_t black_box_applies = 0; // sparse path
    std::uint32_t attempts = 0;          // sparse path
    BitVec certificate;                  // left witness u with u M = rhs, when pruned
};

struct BranchReport {
    unsigned n = 0, m = 0, k = 0, delta = 0;
    unsigned d0 = 0;
    std::vector<BranchRecord> branches; // indexed by tail value
};

// Degree for the consistency matrices: first nonpositive index of the series
// for n-k variables; delta-many extra specializations intentionally do not
// enter this computation.
inline unsigned choose_d0(unsigned n, unsigned m, unsigned k, std::optional<unsigned> override = {}) {
    if (override) {
        if (*override < 2) throw std::invalid_argument("choose_d0: override must be >= 2");
        return *override;
    }
    if (!(k < n) || n > m) throw std::invalid_argument("choose_d0: need k < n <= m");
    return d0(n - k, m);
}

// delta = 1 pays off when the first nonpositive coefficient is small in
// magnitude (the filter matrix is then nearly square).
inline unsigned recommended_delta(unsigned n, unsigned m, unsigned k) {
    BigInt v = first_nonpositive_value(n - k, m);
    return boost::multiprecision::abs(v) <= 8 ? 1u : 0u;
}

// All zeros of the system by plain enumeration; reference semantics for
// everything else in this header.
inline SolutionSet exhaustive_search(const QuadraticSystem& s, unsigned cap = 32) {
    if (s.n > cap || s.n > 63)
        throw ScaleCapError("exhaustive_search: " + std::to_string(s.n) + " variables exceeds cap");
    PackedSystemEval eval(s);
    SolutionSet out;
    out.n = s.n;
    std::uint64_t limit = std::uint64_t{1} << s.n;
    for (std::uint64_t a = 0; a < limit; ++a)
        if (eval.all_vanish(a)) out.points.push_back(a);
    return out;
}

namespace detail {

struct BranchContext {
    const QuadraticSystem* sys;
    unsigned k = 0, delta = 0, d0 = 0, head_vars = 0;
    SolveMethod method = SolveMethod::dense_deterministic;
    std::uint64_t seed = 1;
    bool want_records = false;
    bool stop_at_first = false;
};

// Process one specialization tail: build the filter matrix, try the left
// system, fall back to searching the head variables.
inline void run_branch(const BranchContext& ctx, std::uint64_t tail, std::vector<std::uint64_t>& sols,
                       BranchRecord* rec) {
    unsigned spec_vars = ctx.k + ctx.delta;
    std::vector<bool> tail_bits(spec_vars);
    for (unsigned i = 0; i < spec_vars; ++i) tail_bits[i] = (tail >> i) & 1u;
    QuadraticSystem branch_sys = ctx.sys->specialize(tail_bits);

    MacaulayMatrix mac(branch_sys, ctx.d0);
    BitVec r = mac.rhs();
    if (rec) {
        rec->tail = tail;
        rec->matrix_rows = static_cast<std::uint32_t>(mac.n_rows());
        rec->matrix_cols = static_cast<std::uint32_t>(mac.n_cols());
        rec->matrix_nnz = mac.sparse().nnz();
    }

    BranchOutcome outcome;
    BitVec witness;
    if (ctx.method == SolveMethod::dense_deterministic) {
        BitMatrix dense = mac.sparse().to_dense();
        EchelonForm ef = rref(dense);
        if (rec) rec->rank = static_cast<std::uint32_t>(ef.rank);
        BitVec residue = r;
        BitVec combo(dense.rows());
        for (std::size_t i = 0; i < ef.rank; ++i) {
            if (residue.get(ef.pivot_cols[i])) {
                residue ^= ef.echelon.row(i);
                combo ^= ef.transform.row(i);
            }
        }
        if (residue.is_zero()) {
            if (!(mul_left(combo, dense) == r)) throw std::logic_error("dense filter: witness failed verification");
            outcome = BranchOutcome::pruned_with_certificate;
            witness = std::move(combo);
        } else {
            outcome = BranchOutcome::searched;
        }
    } else {
        SplitMix64 branch_rng(splitmix64_once(ctx.seed ^ tail));
        LeftSolveOutcome res = solve_left_lasvegas(mac.sparse(), r, branch_rng);
        if (rec) {
            rec->black_box_applies = res.stats.applies + res.stats.transpose_applies;
            rec->attempts = res.stats.attempts;
        }
        switch (res.status) {
        case ConsistencyStatus::consistent:
            outcome = BranchOutcome::pruned_with_certificate;
            witness = std::move(res.left_witness);
            break;
        case ConsistencyStatus::inconsistent: outcome = BranchOutcome::searched; break;
        default: outcome = BranchOutcome::filter_inconclusive; break;
        }
    }

    if (rec) rec->outcome = outcome;
    if (outcome == BranchOutcome::pruned_with_certificate) {
        if (rec) rec->certificate = std::move(witness);
        return;
    }

    PackedSystemEval eval(branch_sys);
    std::uint64_t limit = std::uint64_t{1} << ctx.head_vars;
    std::uint32_t found = 0;
    for (std::uint64_t head = 0; head < limit; ++head) {
        if (eval.all_vanish(head)) {
            sols.push_back(head | (tail << ctx.head_vars));
            ++found;
            if (ctx.stop_at_first) break;
        }
    }
    if (rec) rec->solutions_found = found;
}

inline void validate(const QuadraticSystem& s, const SolveConfig& cfg, unsigned& k_out) {
    unsigned n = s.n, m = s.m();
    if (n > m) throw std::invalid_argument("boolean_solve: m >= n required");
    unsigned k;
    if (cfg.k) {
        k = *cfg.k;
    } else {
        double theta = cfg.method == SolveMethod::sparse_lasvegas ? 2.0 : 3.0;
        double gamma = optimal_gamma(static_cast<double>(m) / n, theta);
        k = static_cast<unsigned>(std::ceil(n * (1.0 - gamma) - 1e-9));
        if (k + cfg.delta >= n) k = n - 1 - cfg.delta; // tiny systems: keep one head variable
    }
    if (k + cfg.delta >= n) throw std::invalid_argument("boolean_solve: k + delta < n required");
    if (k + cfg.delta > 30) throw ScaleCapError("boolean_solve: 2^(k+delta) branches exceed cap");
    if (n - k - cfg.delta > cfg.exhaustive_cap)
        throw ScaleCapError("boolean_solve: per-branch search exceeds exhaustive cap");
    if (cfg.d0_override && *cfg.d0_override < 2)
        throw std::invalid_argument("boolean_solve: d0 override must be >= 2");
    k_out = k;
}

} // namespace detail

// The hybrid solver: enumerate the 2^(k+delta) specializations of the last
// variables, prune each branch whose Macaulay system proves inconsistency,
// and search the surviving branches exhaustively. The result is the full
// solution set, independent of method, delta and scheduling.
inline std::pair<SolutionSet, BranchReport> boolean_solve(const QuadraticSystem& s, const SolveConfig& cfg) {
    unsigned k = 0;
    detail::validate(s, cfg, k);
    unsigned spec_vars = k + cfg.delta;

    detail::BranchContext ctx;
    ctx.sys = &s;
    ctx.k = k;
    ctx.delta = cfg.delta;
    ctx.d0 = choose_d0(s.n, s.m(), k, cfg.d0_override);
    ctx.head_vars = s.n - spec_vars;
    ctx.method = cfg.method;
    ctx.seed = cfg.seed;
    ctx.want_records = cfg.collect_report;

    std::uint64_t n_tails = std::uint64_t{1} << spec_vars;
    BranchReport report;
    report.n = s.n;
    report.m = s.m();
    report.k = k;
    report.delta = cfg.delta;
    report.d0 = ctx.d0;
    if (cfg.collect_report) report.branches.resize(n_tails);

    SolutionSet all;
    all.n = s.n;
    unsigned workers = std::max(1u, cfg.workers);
    if (workers == 1) {
        for (std::uint64_t tail = 0; tail < n_tails; ++tail)
            detail::run_branch(ctx, tail, all.points, cfg.collect_report ? &report.branches[tail] : nullptr);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::vector<std::uint64_t>> partial(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (;;) {
                    std::uint64_t tail = next.fetch_add(1);
                    if (tail >= n_tails) return;
                    detail::run_branch(ctx, tail, partial[w],
                                       cfg.collect_report ? &report.branches[tail] : nullptr);
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& p : partial) all.points.insert(all.points.end(), p.begin(), p.end());
    }
    std::sort(all.points.begin(), all.points.end());
    return {std::move(all), std::move(report)};
}

// SAT variant: first solution in (tail, head) order, or nothing. Branch order
// is fixed, so the answer is deterministic for a given seed.
inline std::optional<Assignment> boolean_solve_sat(const QuadraticSystem& s, const SolveConfig& cfg) {
    unsigned k = 0;
    detail::validate(s, cfg, k);
    unsigned spec_vars = k + cfg.delta;

    detail::BranchContext ctx;
    ctx.sys = &s;
    ctx.k = k;
    ctx.delta = cfg.delta;
    ctx.d0 = choose_d0(s.n, s.m(), k, cfg.d0_override);
    ctx.head_vars = s.n - spec_vars;
    ctx.method = cfg.method;
    ctx.seed = cfg.seed;
    ctx.stop_at_first = true;

    std::uint64_t n_tails = std::uint64_t{1} << spec_vars;
    std::vector<std::uint64_t> found;
    for (std::uint64_t tail = 0; tail < n_tails; ++tail) {
        detail::run_branch(ctx, tail, found, nullptr);
        if (!found.empty()) return Assignment(s.n, found.front());
    }
    return std::nullopt;
}

} // namespace mqsolve
