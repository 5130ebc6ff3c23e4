#include <gtest/gtest.h>

#include <cmath>

#include "mqsolve/asymptotic.hpp"
#include "mqsolve/cost.hpp"

using namespace mqsolve;

TEST(Asymptotic, MOfOne) { EXPECT_NEAR(m_asym(1.0), 0.08998, 5e-5); }

TEST(Asymptotic, MAtLasVegasRatio) { EXPECT_NEAR(m_asym(1.0 / 0.55), 0.0557, 5e-5); }

TEST(Asymptotic, MDecreasing) {
    double prev = m_asym(1.0);
    for (double x = 1.5; x <= 5.01; x += 0.5) {
        double cur = m_asym(x);
        EXPECT_LT(cur, prev) << x;
        prev = cur;
    }
}

TEST(Asymptotic, MDomainError) { EXPECT_THROW(m_asym(0.99), std::invalid_argument); }

TEST(Asymptotic, FAlphaGamma) {
    EXPECT_NEAR(f_alpha_gamma(1.0, 0.55), 0.1706, 1e-4);
    EXPECT_NEAR(f_alpha_gamma(1.0, 1.0), binary_entropy(m_asym(1.0)), 1e-12);
    EXPECT_NEAR(f_alpha_gamma(1.0, 1.0), 0.4365, 5e-4);
    EXPECT_LT(f_alpha_gamma(1.0, 1e-4), 1e-3); // vanishes with gamma
}

TEST(Asymptotic, ExponentFig2Coordinates) {
    EXPECT_NEAR(exponent(1.0, 0.55, 2.0), 0.7911, 5e-4);
    EXPECT_NEAR(exponent(1.0, 0.40, 2.376), 0.8410, 5e-4);
    EXPECT_NEAR(exponent(1.0, 0.27, 3.0), 0.8876, 5e-4);
    EXPECT_NEAR(exponent(2.0, optimal_gamma(2.0, 2.0), 2.0), 0.5847, 5e-4);
}

TEST(Asymptotic, OptimalGamma) {
    EXPECT_DOUBLE_EQ(optimal_gamma(1.0, 2.0), 0.55);
    EXPECT_DOUBLE_EQ(optimal_gamma(1.0, 3.0), 0.27);
    EXPECT_DOUBLE_EQ(optimal_gamma(1.0, 2.376), 0.40);
    EXPECT_DOUBLE_EQ(optimal_gamma(2.0, 2.0), 1.0); // clamped
    EXPECT_THROW(optimal_gamma(1.0, 2.5), std::invalid_argument);
}

TEST(Asymptotic, TheoremBounds) {
    // 1 - gamma* + theta F(gamma*) <= 1 - slope * alpha + 1e-3 at gamma* = lambda* alpha
    struct Case {
        double theta, lambda, slope;
    };
    for (Case c : {Case{2.0, 0.55, 0.208}, Case{2.376, 0.40, 0.159}, Case{3.0, 0.27, 0.112}}) {
        double alpha_max = 1.0 / c.lambda;
        for (int i = 0; i <= 8; ++i) {
            double alpha = 1.0 + (alpha_max - 1.0) * i / 8.0;
            double g = c.lambda * alpha;
            EXPECT_LE(exponent(alpha, g, c.theta), 1.0 - c.slope * alpha + 1e-3) << "theta=" << c.theta << " alpha=" << alpha;
        }
    }
}

TEST(MacaulaySizes, SpecExamples) {
    MacaulaySizes a = macaulay_sizes(4, 4, 2);
    EXPECT_EQ(a.c_mac, 11);
    EXPECT_EQ(a.r_mac, 4);
    EXPECT_EQ(a.s_mac_bound, 44);
    MacaulaySizes b = macaulay_sizes(10, 10, 3);
    EXPECT_EQ(b.c_mac, 176);
    EXPECT_EQ(b.r_mac, 110);
    MacaulaySizes c = macaulay_sizes(5, 3, 0);
    EXPECT_EQ(c.c_mac, 1);
    EXPECT_EQ(c.r_mac, 0); // empty multiplier sum
}

TEST(MacaulaySizes, AnalyticBoundsGrid) {
    for (unsigned nv = 5; nv <= 24; ++nv)
        for (unsigned m : {nv, 2 * nv})
            for (unsigned d = 2; 2 * d < nv; ++d) EXPECT_TRUE(macaulay_size_bounds_hold(nv, m, d)) << nv << " " << d;
}

TEST(ConcreteCost, MonotoneInN) {
    for (CostMethod method : {CostMethod::las_vegas, CostMethod::det3}) {
        double prev = 0.0;
        for (unsigned n = 50; n <= 400; n += 25) {
            double cur = best_cost_over_k(n, n, method).total_bitops_log2;
            EXPECT_GT(cur, prev) << n;
            prev = cur;
        }
    }
}

TEST(ConcreteCost, PreconditionErrors) {
    EXPECT_THROW(concrete_cost(10, 9, 0, CostMethod::las_vegas), std::invalid_argument);
    EXPECT_THROW(concrete_cost(10, 10, 10, CostMethod::las_vegas), std::invalid_argument);
}

TEST(ConcreteCost, CrossoversVsExhaustiveSearch) {
    unsigned lv = crossover_vs_exhaustive(CostMethod::las_vegas, 1, 150, 260);
    EXPECT_GE(lv, 180u);
    EXPECT_LE(lv, 220u);
    unsigned det = crossover_vs_exhaustive(CostMethod::det3, 1, 230, 330);
    EXPECT_GE(det, 250u);
    EXPECT_LE(det, 310u);
}

TEST(QuadMinN, TableBands) {
    unsigned n128 = quad_min_n(128.0, 1);
    EXPECT_GE(n128, 115u);
    EXPECT_LE(n128, 141u);
}

TEST(QuadMinN, RejectsTinyBudgets) { EXPECT_THROW(quad_min_n(32.0, 1), std::invalid_argument); }
