#include <gtest/gtest.h>

#include <cmath>

#include "mqsolve/bitmatrix.hpp"
#include "mqsolve/probability.hpp"
#include "mqsolve/rng.hpp"

using namespace mqsolve;

TEST(RankProbability, HandValues) {
    EXPECT_DOUBLE_EQ(rank_probability(1, 1, 1), 0.5);
    EXPECT_DOUBLE_EQ(rank_probability(2, 2, 2), 0.375);
    EXPECT_DOUBLE_EQ(rank_probability(1, 1, 0), 0.5);
}

TEST(RankProbability, SumsToOne) {
    for (unsigned p = 1; p <= 10; ++p) {
        for (unsigned q = 1; q <= 10; ++q) {
            BigRational sum = 0;
            for (unsigned r = 0; r <= std::min(p, q); ++r) sum += rank_probability_exact(p, q, r);
            EXPECT_EQ(sum, BigRational(1)) << p << "x" << q;
        }
    }
}

TEST(RankProbability, RangeChecked) { EXPECT_THROW(rank_probability(3, 4, 4), std::invalid_argument); }

TEST(RankProbability, NoUnderflowAtLargeDimensions) {
    double v = rank_probability(60, 60, 60);
    EXPECT_GT(v, 0.2); // full rank keeps constant probability; 2^{-3600} never materializes
    EXPECT_LT(v, 0.5);
}

TEST(RankProbability, MatchesMonteCarloWithinThreeSigma) {
    SplitMix64 rng(101);
    const unsigned samples = 100000;
    for (auto [p, q] : {std::pair<unsigned, unsigned>{4, 4}, {6, 5}, {8, 8}}) {
        std::vector<unsigned> counts(std::min(p, q) + 1, 0);
        for (unsigned s = 0; s < samples; ++s) {
            BitMatrix m(p, q);
            for (unsigned r = 0; r < p; ++r)
                for (unsigned c = 0; c < q; ++c) m.set(r, c, rng.next_bit());
            ++counts[rank(m)];
        }
        for (unsigned r = 0; r <= std::min(p, q); ++r) {
            double prob = rank_probability(p, q, r);
            double sigma = std::sqrt(prob * (1.0 - prob) / samples);
            double freq = static_cast<double>(counts[r]) / samples;
            EXPECT_NEAR(freq, prob, std::max(3.0 * sigma, 1e-4)) << p << "x" << q << " rank " << r;
        }
    }
}

TEST(LeftConsistency, SquareValues) {
    // small square cases, frozen from exhaustive enumeration over all
    // matrices (2^16 for p = 4); the approach to 0.6103 is slower than the
    // usual "0.61 from p = 4 on" rounding suggests
    EXPECT_NEAR(left_consistency_probability(4, 4), 0.599442, 1e-6);
    EXPECT_NEAR(left_consistency_probability(5, 5), 0.604962, 1e-6);
    for (unsigned p = 6; p <= 20; ++p) {
        double q = left_consistency_probability(p, p);
        EXPECT_GE(q, 0.605) << p;
        EXPECT_LE(q, 0.615) << p;
    }
    for (unsigned p = 1; p <= 20; ++p) EXPECT_GE(left_consistency_probability(p + 6, p), 0.985) << p;
    EXPECT_DOUBLE_EQ(left_consistency_probability(1, 1), 0.5);
}

TEST(LeftConsistency, MatchesSolveLeftFrequency) {
    SplitMix64 rng(102);
    const unsigned samples = 20000;
    unsigned p = 6, q = 6;
    BitVec r(q);
    r.set(q - 1, true); // fixed nonzero target
    unsigned hits = 0;
    for (unsigned s = 0; s < samples; ++s) {
        BitMatrix m(p, q);
        for (unsigned i = 0; i < p; ++i)
            for (unsigned c = 0; c < q; ++c) m.set(i, c, rng.next_bit());
        if (solve_left(m, r)) ++hits;
    }
    double prob = left_consistency_probability(p, q);
    double sigma = std::sqrt(prob * (1.0 - prob) / samples);
    EXPECT_NEAR(static_cast<double>(hits) / samples, prob, 3.0 * sigma);
}

TEST(PoissonMax, PaperSeries) { EXPECT_NEAR(poisson_max_expectation(1000, 1.0), 5.51, 0.01); }

TEST(PoissonMax, SingleDrawIsTheMean) { EXPECT_NEAR(poisson_max_expectation(1, 1.0), 1.0, 1e-6); }

TEST(PoissonMax, MonotoneInCount) {
    double prev = 0.0;
    for (unsigned count : {1u, 10u, 100u, 1000u}) {
        double cur = poisson_max_expectation(count, 1.0);
        EXPECT_GE(cur, prev);
        prev = cur;
    }
}
