#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>

namespace mqsolve {

using BigRational = boost::multiprecision::cpp_rational;

// Probability that a uniform random p x q matrix over GF(2) has rank r:
//   P(p,q,r) = 2^{-pq} prod_{j<r}(2^p - 2^j) prod_{j<r}(2^q - 2^j)
//              / prod_{j<r}(2^r - 2^j).
// Kept exact; the doubles involved underflow around p, q = 60.
inline BigRational rank_probability_exact(unsigned p, unsigned q, unsigned r) {
    if (r > p || r > q) throw std::invalid_argument("rank_probability: r <= min(p, q) required");
    using boost::multiprecision::cpp_int;
    cpp_int num = 1, den = cpp_int(1) << (static_cast<std::size_t>(p) * q);
    for (unsigned j = 0; j < r; ++j) {
        num *= (cpp_int(1) << p) - (cpp_int(1) << j);
        num *= (cpp_int(1) << q) - (cpp_int(1) << j);
        den *= (cpp_int(1) << r) - (cpp_int(1) << j);
    }
    return BigRational(num, den);
}

inline double rank_probability(unsigned p, unsigned q, unsigned r) {
    return rank_probability_exact(p, q, r).convert_to<double>();
}

// Probability that u M = v is consistent for a uniform random p x q matrix M
// and a fixed nonzero v: Q(p,q) = sum_i P(p,q,i) (2^i - 1)/(2^q - 1).
inline BigRational left_consistency_probability_exact(unsigned p, unsigned q) {
    if (p < 1 || q < 1) throw std::invalid_argument("left_consistency_probability: p, q >= 1 required");
    using boost::multiprecision::cpp_int;
    BigRational sum = 0;
    cpp_int qden = (cpp_int(1) << q) - 1;
    unsigned top = p < q ? p : q; // higher ranks have probability zero
    for (unsigned i = 1; i <= top; ++i)
        sum += rank_probability_exact(p, q, i) * BigRational((cpp_int(1) << i) - 1, qden);
    return sum;
}

inline double left_consistency_probability(unsigned p, unsigned q) {
    return left_consistency_probability_exact(p, q).convert_to<double>();
}

// Expected maximum of `count` iid Poisson(lambda) draws:
//   sum_{k>=1} k (F(k)^count - F(k-1)^count),
// with the series cut once terms drop below 1e-12.
inline double poisson_max_expectation(unsigned count = 1000, double lambda = 1.0) {
    if (count < 1) throw std::invalid_argument("poisson_max_expectation: count >= 1 required");
    long double pmf = std::exp(static_cast<long double>(-lambda)); // P(X = 0)
    long double cdf_prev = pmf;                                    // F(0)
    long double pow_prev = std::pow(cdf_prev, static_cast<long double>(count));
    long double total = 0.0L;
    for (unsigned k = 1;; ++k) {
        pmf *= lambda / k;
        long double cdf = cdf_prev + pmf;
        long double pow_cur = std::pow(cdf, static_cast<long double>(count));
        long double term = k * (pow_cur - pow_prev);
        total += term;
        cdf_prev = cdf;
        pow_prev = pow_cur;
        // cut the tail only once the max-distribution has its mass behind us
        if (pow_cur > 1.0L - 1e-13L && term < 1e-12L) break;
        if (k > 100000) break;
    }
    return static_cast<double>(total);
}

} // namespace mqsolve
