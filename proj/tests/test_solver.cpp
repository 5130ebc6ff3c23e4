#include <gtest/gtest.h>

#include <cmath>

#include "mqsolve/anf_io.hpp"
#include "mqsolve/solver.hpp"

using namespace mqsolve;

namespace {

SolveConfig cfg_with(unsigned k, unsigned delta, SolveMethod method, std::uint64_t seed = 7) {
    SolveConfig cfg;
    cfg.k = k;
    cfg.delta = delta;
    cfg.method = method;
    cfg.seed = seed;
    return cfg;
}

// Pad a contradictory pair with fresh equations up to m = n.
QuadraticSystem contradictory_system(unsigned n) {
    std::vector<QuadraticPoly> polys;
    QuadraticPoly a(n), b(n);
    a.set_linear(0, true); // x1
    b.set_linear(0, true);
    b.set_constant(true); // x1 + 1
    polys.push_back(a);
    polys.push_back(b);
    QuadraticSystem pad = random_system(n, n, 0xFEED);
    for (unsigned j = 2; j < n; ++j) polys.push_back(pad.polys[j]);
    return QuadraticSystem(n, std::move(polys));
}

QuadraticSystem planted_system(unsigned n, unsigned m, std::uint64_t seed, std::uint64_t z) {
    QuadraticSystem s = random_system(n, m, seed);
    for (auto& p : s.polys) {
        if (p.evaluate(Assignment(n, z))) p.set_constant(!p.constant());
    }
    return s;
}

} // namespace

TEST(ChooseD0, SeriesAndOverride) {
    EXPECT_EQ(choose_d0(10, 10, 7), 2u);
    EXPECT_EQ(choose_d0(10, 10, 6), 3u);
    EXPECT_EQ(choose_d0(10, 10, 6, 2u), 2u);
    EXPECT_THROW(choose_d0(10, 10, 6, 1u), std::invalid_argument);
}

TEST(ExhaustiveSearch, SpecExamples) {
    SolutionSet only_zero = exhaustive_search(parse(std::string("p 2 2\nx1\nx2\n")));
    EXPECT_EQ(only_zero.points, (std::vector<std::uint64_t>{0}));
    SolutionSet empty = exhaustive_search(parse(std::string("p 1 2\nx1+1\nx1\n")));
    EXPECT_TRUE(empty.points.empty());
    SolutionSet triple = exhaustive_search(parse(std::string("p 2 1\nx1*x2+1\n")));
    EXPECT_EQ(triple.points, (std::vector<std::uint64_t>{3}));
}

TEST(ExhaustiveSearch, CapEnforced) {
    QuadraticSystem s = random_system(12, 12, 5);
    EXPECT_THROW(exhaustive_search(s, 10), ScaleCapError);
}

TEST(BooleanSolve, MatchesBruteForceBothMethodsAndDeltas) {
    unsigned trials_per_size = 5;
    for (unsigned n = 8; n <= 11; ++n) {
        for (unsigned t = 0; t < trials_per_size; ++t) {
            QuadraticSystem s = random_system(n, n, 1000 * n + t);
            SolutionSet want = exhaustive_search(s);
            auto k = static_cast<unsigned>(std::ceil(0.45 * n - 1e-9));
            for (SolveMethod method : {SolveMethod::dense_deterministic, SolveMethod::sparse_lasvegas}) {
                for (unsigned delta : {0u, 1u}) {
                    auto [got, rep] = boolean_solve(s, cfg_with(k, delta, method, 99 + t));
                    EXPECT_EQ(got.points, want.points)
                        << "n=" << n << " t=" << t << " delta=" << delta
                        << " method=" << (method == SolveMethod::dense_deterministic ? "dense" : "lv");
                }
            }
        }
    }
}

TEST(BooleanSolve, PlantedSolutionIsFound) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        unsigned n = 10;
        std::uint64_t z = (0x2F9 + 137 * seed) & ((1u << n) - 1);
        QuadraticSystem s = planted_system(n, n, seed, z);
        auto [sols, rep] = boolean_solve(s, cfg_with(5, 0, SolveMethod::dense_deterministic));
        EXPECT_TRUE(sols.contains(z));
    }
}

TEST(BooleanSolve, ContradictorySystemAllBranchesResolve) {
    QuadraticSystem s = contradictory_system(9);
    auto [sols, rep] = boolean_solve(s, cfg_with(4, 0, SolveMethod::dense_deterministic));
    EXPECT_TRUE(sols.points.empty());
    for (const auto& br : rep.branches) {
        if (br.outcome == BranchOutcome::pruned_with_certificate) {
            EXPECT_GT(br.certificate.size(), 0u);
        } else {
            EXPECT_EQ(br.solutions_found, 0u);
        }
    }
}

TEST(BooleanSolve, PrunedBranchesHaveNoSolutions) {
    // oracle: exhaustively search every pruned branch
    for (std::uint64_t seed = 40; seed < 48; ++seed) {
        unsigned n = 10, k = 5;
        QuadraticSystem s = random_system(n, n, seed);
        auto [sols, rep] = boolean_solve(s, cfg_with(k, 0, SolveMethod::dense_deterministic));
        for (const auto& br : rep.branches) {
            if (br.outcome != BranchOutcome::pruned_with_certificate) continue;
            std::vector<bool> tail(k);
            for (unsigned i = 0; i < k; ++i) tail[i] = (br.tail >> i) & 1;
            EXPECT_TRUE(exhaustive_search(s.specialize(tail)).points.empty()) << "seed " << seed;
        }
    }
}

TEST(BooleanSolve, WorkerCountDoesNotChangeAnything) {
    QuadraticSystem s = random_system(11, 11, 77);
    SolveConfig one = cfg_with(5, 1, SolveMethod::sparse_lasvegas, 5);
    SolveConfig four = one;
    four.workers = 4;
    auto [s1, r1] = boolean_solve(s, one);
    auto [s4, r4] = boolean_solve(s, four);
    EXPECT_EQ(s1.points, s4.points);
    ASSERT_EQ(r1.branches.size(), r4.branches.size());
    for (std::size_t i = 0; i < r1.branches.size(); ++i)
        EXPECT_EQ(r1.branches[i].outcome, r4.branches[i].outcome);
}

TEST(BooleanSolve, DefaultKFromCostModel) {
    QuadraticSystem s = random_system(10, 10, 3);
    SolveConfig cfg;
    cfg.method = SolveMethod::sparse_lasvegas; // theta = 2: gamma 0.55, k = ceil(4.5) = 5
    auto [sols, rep] = boolean_solve(s, cfg);
    EXPECT_EQ(rep.k, 5u);
    EXPECT_EQ(sols.points, exhaustive_search(s).points);
}

TEST(BooleanSolve, ConfigViolations) {
    QuadraticSystem s = random_system(8, 8, 3);
    EXPECT_THROW(boolean_solve(s, cfg_with(8, 0, SolveMethod::dense_deterministic)), std::invalid_argument);
    EXPECT_THROW(boolean_solve(s, cfg_with(5, 3, SolveMethod::dense_deterministic)), std::invalid_argument);
    QuadraticSystem wide = random_system(8, 6, 3);
    EXPECT_THROW(boolean_solve(wide, cfg_with(3, 0, SolveMethod::dense_deterministic)), std::invalid_argument);
}

TEST(RecommendedDelta, SmallFirstNonpositiveValue) {
    // |first nonpositive| = 0 at (4, 11): nearly square filter, delta 1 advised
    EXPECT_EQ(recommended_delta(11, 11, 7), 1u);
    // comfortably negative at (6, 12): no extra specialization needed
    EXPECT_EQ(recommended_delta(12, 12, 6), 0u);
}

TEST(BooleanSolveSat, EmptyIffSolveEmpty) {
    for (std::uint64_t seed = 60; seed < 70; ++seed) {
        QuadraticSystem s = random_system(9, 9, seed);
        SolveConfig cfg = cfg_with(4, 0, SolveMethod::dense_deterministic);
        auto [sols, rep] = boolean_solve(s, cfg);
        auto sat = boolean_solve_sat(s, cfg);
        EXPECT_EQ(sat.has_value(), !sols.points.empty());
        if (sat) {
            EXPECT_EQ(sat->as_mask(), sols.points.front()); // first in branch order
            for (const auto& p : s.polys) EXPECT_EQ(p.evaluate(*sat), 0);
        }
    }
}

TEST(BooleanSolveSat, SpecExamples) {
    QuadraticSystem s = parse(std::string("p 2 2\nx1*x2+1\nx1*x2+1\n"));
    auto sol = boolean_solve_sat(s, cfg_with(1, 0, SolveMethod::dense_deterministic));
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(sol->as_mask(), 3u);
    QuadraticSystem unsat = contradictory_system(8);
    EXPECT_FALSE(boolean_solve_sat(unsat, cfg_with(3, 0, SolveMethod::dense_deterministic)).has_value());
}
