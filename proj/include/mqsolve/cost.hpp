#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "mqsolve/asymptotic.hpp"
#include "mqsolve/series.hpp"

namespace mqsolve {

enum class CostMethod { det3, det2376, las_vegas };

inline double cost_theta(CostMethod m) {
    switch (m) {
    case CostMethod::det3: return 3.0;
    case CostMethod::det2376: return 2.376;
    case CostMethod::las_vegas: return 2.0;
    }
    throw std::invalid_argument("cost_theta: bad method");
}

inline std::string cost_method_name(CostMethod m) {
    switch (m) {
    case CostMethod::det3: return "det3";
    case CostMethod::det2376: return "det2.376";
    case CostMethod::las_vegas: return "lasvegas";
    }
    return "?";
}

struct MacaulaySizes {
    BigInt c_mac;       // columns: sum_{i<=d} C(nv, i)
    BigInt r_mac;       // rows: m * sum_{i<=d-2} C(nv, i)
    BigInt s_mac_bound; // nonzeros: at most (1 + nv + C(nv,2)) per row
};

namespace detail {

inline BigInt big_binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
}

inline BigInt binomial_prefix_sum(unsigned n, unsigned d) {
    BigInt sum = 0, term = 1;
    for (unsigned i = 0; i <= d && i <= n; ++i) {
        sum += term;
        term = term * (n - i) / (i + 1);
    }
    return sum;
}

inline double log2_bigint(const BigInt& x) {
    if (x <= 0) throw std::invalid_argument("log2_bigint: positive input required");
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x));
    if (bits <= 960) return std::log2(x.convert_to<double>());
    BigInt shifted = x >> (bits - 960);
    return std::log2(shifted.convert_to<double>()) + static_cast<double>(bits - 960);
}

} // namespace detail

// Exact row/column/nonzero counts of the boolean Macaulay matrix in degree d.
// The binomial sums saturate at degree nv, so d past nv is harmless.
inline MacaulaySizes macaulay_sizes(unsigned nv, unsigned m, unsigned d) {
    MacaulaySizes out;
    out.c_mac = detail::binomial_prefix_sum(nv, d);
    out.r_mac = d >= 2 ? BigInt(m) * detail::binomial_prefix_sum(nv, d - 2) : BigInt(0);
    BigInt per_row = 1 + BigInt(nv) + detail::big_binomial(nv, 2);
    out.s_mac_bound = per_row * out.r_mac;
    return out;
}

// The analytic bounds that majorize the exact sizes when 1 <= d < nv/2:
//   c < (1-x)/(1-2x) C(nv,d),  r < m x^2/((1-2x)(1-x)) C(nv,d),
//   s < m nv^2 x^2/((1-2x)(1-x)) C(nv,d),  with x = d/nv.
// Checked exactly over the rationals.
inline bool macaulay_size_bounds_hold(unsigned nv, unsigned m, unsigned d) {
    if (d < 1 || 2 * d >= nv) throw std::invalid_argument("macaulay_size_bounds_hold: need 1 <= d < nv/2");
    MacaulaySizes sz = macaulay_sizes(nv, m, d);
    BigInt bnd = detail::big_binomial(nv, d);
    // scale everything by nv^2 (1-2x) (1-x) > 0 to stay integral
    BigInt n2 = BigInt(nv) * nv;
    BigInt one_minus_2x = BigInt(nv) - 2 * d; // times nv
    BigInt one_minus_x = BigInt(nv) - d;      // times nv
    bool c_ok = sz.c_mac * one_minus_2x * nv < one_minus_x * nv * bnd;
    bool r_ok = sz.r_mac * one_minus_2x * one_minus_x < BigInt(m) * d * d * bnd;
    bool s_ok = sz.s_mac_bound * one_minus_2x * one_minus_x < BigInt(m) * n2 * d * d * bnd;
    return c_ok && r_ok && s_ok;
}

struct CostEstimate {
    unsigned n = 0, m = 0, k = 0;
    double alpha = 0.0;          // m/n
    double gamma = 0.0;          // 1 - k/n
    double theta = 0.0;          // linear-algebra exponent in the model
    double exponent_per_n = 0.0; // 1 - gamma + theta F_alpha(gamma)
    unsigned d0 = 0;
    CostMethod method = CostMethod::las_vegas;
    BigInt c_mac, r_mac, s_mac;
    double total_bitops_log2 = 0.0;
};

// Bit-operation estimate for a full run with specialization parameter k,
// using exact matrix sizes in the degree the algorithm actually uses:
//   deterministic: 2^{(1-gamma)n} r c min(r,c)^{theta-2}
//   Las Vegas:     2^{(1-gamma)n} max(r,c) log2(max(r,c)) s
inline CostEstimate concrete_cost(unsigned n, unsigned m, unsigned k, CostMethod method) {
    if (!(k < n) || n > m) throw std::invalid_argument("concrete_cost: need 0 <= k < n <= m");
    CostEstimate est;
    est.n = n;
    est.m = m;
    est.k = k;
    est.method = method;
    est.alpha = static_cast<double>(m) / n;
    est.gamma = 1.0 - static_cast<double>(k) / n;
    est.theta = cost_theta(method);
    est.exponent_per_n = exponent(est.alpha, est.gamma, est.theta);
    est.d0 = d0(n - k, m);
    MacaulaySizes sz = macaulay_sizes(n - k, m, est.d0);
    est.c_mac = sz.c_mac;
    est.r_mac = sz.r_mac;
    est.s_mac = sz.s_mac_bound;
    double search = static_cast<double>(k);
    double lr = detail::log2_bigint(est.r_mac);
    double lc = detail::log2_bigint(est.c_mac);
    if (method == CostMethod::las_vegas) {
        double lmax = std::max(lr, lc);
        est.total_bitops_log2 = search + lmax + std::log2(lmax) + detail::log2_bigint(est.s_mac);
    } else {
        est.total_bitops_log2 = search + lr + lc + (est.theta - 2.0) * std::min(lr, lc);
    }
    return est;
}

// Cost of the best k for given (n, m): the d0-induced steps make the k-cost
// curve dip irregularly, so every k is evaluated.
inline CostEstimate best_cost_over_k(unsigned n, unsigned m, CostMethod method) {
    CostEstimate best = concrete_cost(n, m, 0, method);
    for (unsigned k = 1; k < n; ++k) {
        CostEstimate e = concrete_cost(n, m, k, method);
        if (e.total_bitops_log2 < best.total_bitops_log2) best = e;
    }
    return best;
}

// Reference line the crossovers are quoted against: a full search of GF(2)^n
// costs 2^n up to polynomial factors, which vanish on the log2/n scale used
// for the comparison.
inline double exhaustive_search_cost_log2(unsigned n) { return static_cast<double>(n); }

// Operation count of the word-sliced exhaustive search, for display.
inline double fast_exhaustive_bitops_log2(unsigned n) {
    return n + 2.0 + std::log2(std::log2(static_cast<double>(n)));
}

// Smallest n at which the given variant undercuts exhaustive search.
inline unsigned crossover_vs_exhaustive(CostMethod method, unsigned ratio = 1, unsigned n_lo = 64,
                                        unsigned n_hi = 512) {
    for (unsigned n = n_lo; n <= n_hi; ++n)
        if (best_cost_over_k(n, ratio * n, method).total_bitops_log2 < exhaustive_search_cost_log2(n)) return n;
    throw std::runtime_error("crossover_vs_exhaustive: no crossover in range");
}

// Smallest n such that no choice of k brings the modelled attack cost below
// 2^t_log2 bit operations, for m = ratio * n.
inline unsigned quad_min_n(double t_log2, unsigned ratio, CostMethod method = CostMethod::las_vegas) {
    if (t_log2 < 64.0) throw std::invalid_argument("quad_min_n: security level below 2^64 not tabulated");
    if (ratio < 1) throw std::invalid_argument("quad_min_n: ratio >= 1 required");
    auto secure = [&](unsigned n) { return best_cost_over_k(n, ratio * n, method).total_bitops_log2 >= t_log2; };
    unsigned lo = 8, hi = 16;
    while (!secure(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > (1u << 16)) throw std::runtime_error("quad_min_n: search bound exceeded");
    }
    while (lo + 1 < hi) {
        unsigned mid = lo + (hi - lo) / 2;
        if (secure(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // the cost is monotone in n on every tested grid; walk a couple of steps
    // in case a d0 jump dents that locally
    while (hi > 9 && secure(hi - 1)) --hi;
    return hi;
}

} // namespace mqsolve
