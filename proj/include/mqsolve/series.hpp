#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace mqsolve {

using BigInt = boost::multiprecision::cpp_int;

// Prefix of an integer power series; coeffs[d] is the coefficient of t^d.
struct TruncatedSeries {
    std::vector<BigInt> coeffs;

    unsigned degree_cap() const { return static_cast<unsigned>(coeffs.size()) - 1; }
    const BigInt& at(unsigned d) const { return coeffs.at(d); }
};

// Raised by d0 when no nonpositive coefficient shows up within the scan cap,
// i.e. the parameters are outside the overdetermined regime.
class NoNonpositiveCoefficient : public std::runtime_error {
public:
    NoNonpositiveCoefficient(unsigned nv, unsigned m)
        : std::runtime_error("no nonpositive coefficient in series for nv=" + std::to_string(nv) +
                             ", m=" + std::to_string(m)) {}
};

// Exact expansion of (1+t)^nv / ((1-t)(1+t^2)^m) up to degree cap:
// binomial row for (1+t)^nv, running sums for 1/(1-t), then the alternating
// binomial expansion (1+t^2)^{-m} = sum_j (-1)^j C(m+j-1, j) t^{2j}.
inline TruncatedSeries series_prefix(unsigned nv, unsigned m, unsigned cap) {
    if (m < 1) throw std::invalid_argument("series_prefix: m >= 1 required");
    std::vector<BigInt> binom(cap + 1);
    for (unsigned i = 0; i <= cap; ++i) {
        if (i > nv) {
            binom[i] = 0;
        } else if (i == 0) {
            binom[i] = 1;
        } else {
            binom[i] = binom[i - 1] * (nv - i + 1) / i;
        }
    }
    std::vector<BigInt> cum(cap + 1);
    BigInt run = 0;
    for (unsigned i = 0; i <= cap; ++i) {
        run += binom[i];
        cum[i] = run;
    }
    // alt[j] = (-1)^j C(m+j-1, j)
    std::vector<BigInt> alt(cap / 2 + 1);
    alt[0] = 1;
    for (unsigned j = 1; j <= cap / 2; ++j) alt[j] = -alt[j - 1] * (m + j - 1) / j;
    TruncatedSeries out;
    out.coeffs.assign(cap + 1, 0);
    for (unsigned d = 0; d <= cap; ++d) {
        BigInt c = 0;
        for (unsigned j = 0; 2 * j <= d; ++j) c += alt[j] * cum[d - 2 * j];
        out.coeffs[d] = std::move(c);
    }
    return out;
}

namespace detail {

// Smallest d with coefficient <= 0 (zero counts), scanning up to nv+3.
// Coefficients are produced one at a time from
//   c_d = sum_j (-1)^j C(m+j-1, j) B(d-2j),  B(u) = sum_{i<=u} C(nv, i),
// so the scan stops as soon as the sign flips.
inline unsigned scan_first_nonpositive(unsigned nv, unsigned m, BigInt* value_out) {
    unsigned hard_cap = nv + 3;
    std::vector<BigInt> prefix{1}; // B(0), extended on demand
    std::vector<BigInt> alt{1};    // (-1)^j C(m+j-1, j)
    BigInt binom_row = 1;          // C(nv, d)
    for (unsigned d = 0; d <= hard_cap; ++d) {
        if (d > 0) {
            binom_row = d <= nv ? binom_row * (nv - d + 1) / d : BigInt(0);
            prefix.push_back(prefix.back() + binom_row);
        }
        if (d / 2 >= alt.size()) alt.push_back(-alt.back() * (m + d / 2 - 1) / (d / 2));
        BigInt c = 0;
        for (unsigned j = 0; 2 * j <= d; ++j) c += alt[j] * prefix[d - 2 * j];
        if (c <= 0) {
            if (value_out) *value_out = std::move(c);
            return d;
        }
    }
    throw NoNonpositiveCoefficient(nv, m);
}

} // namespace detail

// Index of the first nonpositive coefficient of (1+t)^nv/((1-t)(1+t^2)^m);
// the degree the Macaulay matrices are built in.
inline unsigned d0(unsigned nv, unsigned m) { return detail::scan_first_nonpositive(nv, m, nullptr); }

// The signed coefficient at index d0(nv, m); its magnitude predicts how well
// the linear filter behaves.
inline BigInt first_nonpositive_value(unsigned nv, unsigned m) {
    BigInt v;
    detail::scan_first_nonpositive(nv, m, &v);
    return v;
}

// Degree of the truncated series [.] itself (one below the nonpositive index).
inline unsigned hs_degree(unsigned nv, unsigned m) { return d0(nv, m) - 1; }

} // namespace mqsolve
