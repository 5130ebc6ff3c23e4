#include <gtest/gtest.h>

#include <set>

#include "mqsolve/bitmatrix.hpp"
#include "mqsolve/rng.hpp"

using namespace mqsolve;

namespace {

BitMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.next_bit());
    return m;
}

// Row-space size by enumerating all 2^rows XOR combinations (rows <= 16).
std::size_t row_space_rank_oracle(const BitMatrix& m) {
    std::set<std::vector<std::uint64_t>> space;
    std::size_t words = m.row_words();
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << m.rows()); ++combo) {
        std::vector<std::uint64_t> acc(words, 0);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if ((combo >> r) & 1)
                for (std::size_t w = 0; w < words; ++w) acc[w] ^= m.row_ptr(r)[w];
        space.insert(acc);
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < space.size()) ++rank;
    return rank;
}

BitVec bits(std::initializer_list<int> vals) {
    BitVec v(vals.size());
    std::size_t i = 0;
    for (int b : vals) v.set(i++, b != 0);
    return v;
}

} // namespace

TEST(Rref, Identity) { EXPECT_EQ(rank(BitMatrix::identity(8)), 8u); }

TEST(Rref, RepeatedRow) {
    BitMatrix m(2, 2);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 0, true);
    m.set(1, 1, true);
    EXPECT_EQ(rank(m), 1u);
}

TEST(Rref, RankMatchesRowSpaceEnumeration) {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        BitMatrix m = random_matrix(rng, 12, 16);
        EXPECT_EQ(rank(m), row_space_rank_oracle(m));
    }
}

TEST(Rref, TransformReconstructsEchelonRows) {
    SplitMix64 rng(12);
    BitMatrix m = random_matrix(rng, 20, 30);
    EchelonForm ef = rref(m);
    for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_TRUE(mul_left(ef.transform.row(r), m) == ef.echelon.row(r));
}

TEST(Rref, RankEqualsTransposeRank) {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        BitMatrix m = random_matrix(rng, 64, 64);
        EXPECT_EQ(rank(m), rank(m.transposed()));
    }
}

TEST(SolveLeft, IdentityPicksUnitVector) {
    BitMatrix id = BitMatrix::identity(4);
    BitVec e2 = bits({0, 1, 0, 0});
    auto u = solve_left(id, e2);
    ASSERT_TRUE(u.has_value());
    EXPECT_TRUE(*u == e2);
}

TEST(SolveLeft, ZeroMatrixNonzeroRhs) {
    BitMatrix z(4, 6);
    BitVec r(6);
    r.set(3, true);
    EXPECT_FALSE(solve_left(z, r).has_value());
}

TEST(SolveLeft, AgreesWithBruteForceOverCombinations) {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        BitMatrix m = random_matrix(rng, 4, 6);
        BitVec r(6);
        for (int c = 0; c < 6; ++c) r.set(c, rng.next_bit());
        bool member = false;
        for (std::uint64_t combo = 0; combo < 16 && !member; ++combo) {
            BitVec u(4);
            for (int i = 0; i < 4; ++i) u.set(i, (combo >> i) & 1);
            if (mul_left(u, m) == r) member = true;
        }
        auto got = solve_left(m, r);
        EXPECT_EQ(got.has_value(), member);
        if (got) EXPECT_TRUE(mul_left(*got, m) == r);
    }
}

TEST(SolveLeft, RecoversSomePreimage) {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 50; ++trial) {
        BitMatrix m = random_matrix(rng, 10, 14);
        BitVec u0(10);
        for (int i = 0; i < 10; ++i) u0.set(i, rng.next_bit());
        BitVec target = mul_left(u0, m);
        auto u = solve_left(m, target);
        ASSERT_TRUE(u.has_value());
        EXPECT_TRUE(mul_left(*u, m) == target); // same image, witness may differ
    }
}

TEST(SolveLeft, DimensionMismatchThrows) {
    BitMatrix m(3, 5);
    EXPECT_THROW(solve_left(m, BitVec(4)), std::invalid_argument);
}
