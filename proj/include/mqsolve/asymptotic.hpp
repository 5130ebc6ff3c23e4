#pragma once

#include <cmath>
#include <stdexcept>

namespace mqsolve {

// Limit of deg(HS_{n, ceil(x n)})/n for x >= 1:
// M(x) = -x + 1/2 + (1/2) sqrt(2x^2 - 10x - 1 + 2(x+2) sqrt(x(x+2))).
inline double m_asym(double x) {
    if (x < 1.0) throw std::invalid_argument("m_asym: x >= 1 required");
    double inner = std::sqrt(x * (x + 2.0));
    double rad = 2.0 * x * x - 10.0 * x - 1.0 + 2.0 * (x + 2.0) * inner;
    return -x + 0.5 + 0.5 * std::sqrt(rad);
}

inline double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

// F_alpha(gamma) = gamma * H2(D) with D = M(alpha/gamma); the log-cost of one
// consistency test per variable, before the linear-algebra exponent.
inline double f_alpha_gamma(double alpha, double gamma) {
    if (alpha < 1.0) throw std::invalid_argument("f_alpha_gamma: alpha >= 1 required");
    if (!(gamma > 0.0) || gamma > 1.0) throw std::invalid_argument("f_alpha_gamma: gamma in (0, 1] required");
    double d = m_asym(alpha / gamma);
    return gamma * binary_entropy(d);
}

// Total asymptotic exponent 1 - gamma + theta * F_alpha(gamma); theta = 2
// models the sparse Las Vegas linear algebra.
inline double exponent(double alpha, double gamma, double theta) {
    if (theta < 2.0 || theta > 3.0) throw std::invalid_argument("exponent: theta in [2, 3] required");
    return 1.0 - gamma + theta * f_alpha_gamma(alpha, gamma);
}

// Optimal specialization fraction: gamma = min(1, lambda* alpha) with
// lambda* in {0.27, 0.40, 0.55} depending on the linear-algebra cost.
inline double optimal_gamma(double alpha, double theta) {
    if (alpha < 1.0) throw std::invalid_argument("optimal_gamma: alpha >= 1 required");
    double lambda;
    if (theta == 3.0) {
        lambda = 0.27;
    } else if (theta == 2.376) {
        lambda = 0.40;
    } else if (theta == 2.0) {
        lambda = 0.55;
    } else {
        throw std::invalid_argument("optimal_gamma: theta must be 2, 2.376 or 3");
    }
    double g = lambda * alpha;
    return g < 1.0 ? g : 1.0;
}

} // namespace mqsolve
