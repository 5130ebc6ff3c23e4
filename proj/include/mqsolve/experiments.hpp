#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "mqsolve/asymptotic.hpp"
#include "mqsolve/bitmatrix.hpp"
#include "mqsolve/macaulay.hpp"
#include "mqsolve/probability.hpp"
#include "mqsolve/solver.hpp"

namespace mqsolve {

// Smallest k for which the specialized series already dips nonpositive at
// degree 2 (square systems): k = ceil(1/2 + n - sqrt(8n - 7)/2).
inline unsigned k_for_d0_2(unsigned n) {
    if (n < 2) throw std::invalid_argument("k_for_d0_2: n >= 2 required");
    long double v = 0.5L + n - std::sqrt(static_cast<long double>(8.0L * n - 7.0L)) / 2.0L;
    auto k = static_cast<unsigned>(std::ceil(v - 1e-9L));
    return k;
}

struct FilterStats {
    unsigned n = 0, m = 0, k = 0, delta = 0;
    unsigned trials = 0;
    std::uint64_t tails_per_trial = 0;
    std::vector<std::uint32_t> unpruned_per_trial;   // filter failed to prune
    std::vector<std::uint32_t> solutions_per_trial;  // brute-force count, from branch search
    std::vector<bool> strong_semiregular_per_trial;
    double avg_unpruned = 0.0;
    std::uint32_t max_unpruned = 0;
    double pruned_fraction = 0.0;
    double threshold = 0.0; // 2^{(1-2 gamma + 2 F_alpha(gamma)) n}, gamma from k
    double strong_sr_fraction = 0.0;
};

namespace detail {

inline double strong_semiregular_threshold(unsigned n, unsigned m, unsigned k) {
    double gamma = 1.0 - static_cast<double>(k) / n;
    double alpha = static_cast<double>(m) / n;
    return std::exp2((1.0 - 2.0 * gamma + 2.0 * f_alpha_gamma(alpha, gamma)) * n);
}

} // namespace detail

// Filtering-quality experiment: solve `trials` random systems and count, per
// trial, the specializations the linear filter fails to prune. A trial is
// gamma-strong semi-regular when both its solution count and its count of
// badly filtered branches (unpruned yet empty) stay below the threshold.
inline FilterStats filtering_experiment(unsigned n, unsigned m, unsigned k, unsigned delta, unsigned trials,
                                        std::uint64_t seed, SolveMethod method = SolveMethod::dense_deterministic) {
    if (n > 24) throw ScaleCapError("filtering_experiment: n > 24 exceeds the desk-scale cap");
    FilterStats st;
    st.n = n;
    st.m = m;
    st.k = k;
    st.delta = delta;
    st.trials = trials;
    st.tails_per_trial = std::uint64_t{1} << (k + delta);
    st.threshold = detail::strong_semiregular_threshold(n, m, k);
    std::uint64_t total_unpruned = 0;
    unsigned strong_count = 0;
    for (unsigned t = 0; t < trials; ++t) {
        QuadraticSystem sys = random_system(n, m, splitmix64_once(seed ^ t));
        SolveConfig cfg;
        cfg.k = k;
        cfg.delta = delta;
        cfg.method = method;
        cfg.seed = splitmix64_once(seed ^ (0x5EEDULL + t));
        auto [sols, report] = boolean_solve(sys, cfg);
        std::uint32_t unpruned = 0, bad = 0;
        for (const auto& br : report.branches) {
            if (br.outcome == BranchOutcome::pruned_with_certificate) continue;
            ++unpruned;
            if (br.solutions_found == 0) ++bad;
        }
        bool strong = static_cast<double>(sols.size()) <= st.threshold && static_cast<double>(bad) <= st.threshold;
        st.unpruned_per_trial.push_back(unpruned);
        st.solutions_per_trial.push_back(static_cast<std::uint32_t>(sols.size()));
        st.strong_semiregular_per_trial.push_back(strong);
        total_unpruned += unpruned;
        if (strong) ++strong_count;
        if (unpruned > st.max_unpruned) st.max_unpruned = unpruned;
    }
    if (trials > 0) {
        st.avg_unpruned = static_cast<double>(total_unpruned) / trials;
        st.pruned_fraction =
            1.0 - static_cast<double>(total_unpruned) / (static_cast<double>(trials) * st.tails_per_trial);
        st.strong_sr_fraction = static_cast<double>(strong_count) / trials;
    }
    return st;
}

struct StrongSemiregularResult {
    bool strong = false;
    std::uint64_t solutions = 0;
    std::uint64_t bad_branches = 0; // unpruned and empty
    double threshold = 0.0;
};

// Direct check of one system against the strong semi-regularity counts, at
// delta = 0. The witness-degree condition is measured by its operational
// consequence: the degree-d0 filter fails although the branch has no zeros.
inline StrongSemiregularResult strong_semiregular_check(const QuadraticSystem& s, double gamma) {
    unsigned n = s.n;
    if (n > 20) throw ScaleCapError("strong_semiregular_check: n > 20 exceeds the brute-force cap");
    auto k = static_cast<unsigned>(std::ceil(n * (1.0 - gamma) - 1e-9));
    SolveConfig cfg;
    cfg.k = k;
    cfg.delta = 0;
    cfg.method = SolveMethod::dense_deterministic;
    auto [sols, report] = boolean_solve(s, cfg);
    StrongSemiregularResult res;
    res.threshold = detail::strong_semiregular_threshold(n, s.m(), k);
    res.solutions = sols.size();
    for (const auto& br : report.branches)
        if (br.outcome != BranchOutcome::pruned_with_certificate && br.solutions_found == 0) ++res.bad_branches;
    res.strong = static_cast<double>(res.solutions) <= res.threshold &&
                 static_cast<double>(res.bad_branches) <= res.threshold;
    return res;
}

// Smallest degree d <= d_max at which the constant polynomial 1 enters the
// Macaulay row space, i.e. the inconsistency certificate becomes visible.
inline std::optional<unsigned> certificate_degree(const QuadraticSystem& s, unsigned d_max) {
    if (s.n > 14) throw ScaleCapError("certificate_degree: n > 14 exceeds cap");
    for (unsigned d = 2; d <= d_max; ++d) {
        MacaulayMatrix mac(s, d);
        if (solve_left(mac.sparse().to_dense(), mac.rhs())) return d;
    }
    return std::nullopt;
}

// CSV: one row per trial.
inline void write_filter_csv(std::ostream& os, const FilterStats& st) {
    os << "trial,unpruned,solutions,strong_semiregular\n";
    for (unsigned t = 0; t < st.trials; ++t)
        os << t << "," << st.unpruned_per_trial[t] << "," << st.solutions_per_trial[t] << ","
           << (st.strong_semiregular_per_trial[t] ? 1 : 0) << "\n";
}

} // namespace mqsolve
