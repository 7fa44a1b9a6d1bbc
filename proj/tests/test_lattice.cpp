#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "toric/lattice.hpp"

using namespace toric;

namespace {

IntMatrix M(std::vector<std::vector<long>> rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST(Hnf, IdentityIsFixed) {
    auto r = hnf(IntMatrix::identity(2));
    EXPECT_EQ(r.h, IntMatrix::identity(2));
    EXPECT_EQ(r.u, IntMatrix::identity(2));
}

TEST(Hnf, AlreadyReduced) { EXPECT_EQ(hnf(M({{2, 0}, {0, 2}})).h, M({{2, 0}, {0, 2}})); }

TEST(Hnf, DeterminantPreserved) {
    IntMatrix m = M({{1, 2}, {3, 4}});
    auto r = hnf(m);
    EXPECT_EQ(abs(oracle::det(r.h)), 2);
    EXPECT_EQ(r.u * m, r.h);
}

TEST(Hnf, RandomMatricesSatisfyPostconditions) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, r, c, -6, 6);
        auto res = hnf(m);
        EXPECT_EQ(res.u * m, res.h);
        EXPECT_EQ(abs(oracle::det(res.u)), 1);
        // echelon shape with positive pivots and reduced entries above them
        std::size_t last = 0;
        bool seen_zero = false;
        for (std::size_t i = 0; i < r; ++i) {
            if (res.h.is_zero_row(i)) {
                seen_zero = true;
                continue;
            }
            ASSERT_FALSE(seen_zero);
            std::size_t p = 0;
            while (res.h(i, p) == 0) ++p;
            if (i > 0) EXPECT_GT(p, last);
            last = p;
            EXPECT_GT(res.h(i, p), 0);
            for (std::size_t k = 0; k < i; ++k) {
                EXPECT_GE(res.h(k, p), 0);
                EXPECT_LT(res.h(k, p), res.h(i, p));
            }
        }
        // row permutation does not change the form
        std::vector<std::size_t> perm(r);
        for (std::size_t i = 0; i < r; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(hnf(m.select_rows(perm)).h, res.h);
    }
}

TEST(Snf, ZeroMatrix) {
    auto r = snf(IntMatrix(2, 3));
    EXPECT_EQ(r.d, IntMatrix(2, 3));
}

TEST(Snf, DiagonalTwoThree) { EXPECT_EQ(snf(M({{2, 0}, {0, 3}})).d, M({{1, 0}, {0, 6}})); }

TEST(Snf, Identity) { EXPECT_EQ(snf(IntMatrix::identity(2)).d, IntMatrix::identity(2)); }

TEST(Snf, RandomMatricesMatchMinorGcds) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, r, c, -5, 5);
        auto res = snf(m);
        EXPECT_EQ(res.u * m * res.v, res.d);
        EXPECT_EQ(abs(oracle::det(res.u)), 1);
        EXPECT_EQ(abs(oracle::det(res.v)), 1);
        Int prod = 1;
        for (std::size_t k = 0; k < std::min(r, c); ++k) {
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if (i != j) EXPECT_EQ(res.d(i, j), 0);
            const Int& dk = res.d(k, k);
            EXPECT_GE(dk, 0);
            if (k + 1 < std::min(r, c) && dk != 0) EXPECT_EQ(res.d(k + 1, k + 1) % dk, 0);
            prod *= dk;
            // product of the first k+1 factors equals the gcd of (k+1)-minors
            EXPECT_EQ(prod, oracle::minor_gcd(m, k + 1));
        }
    }
}

TEST(IntegerKernel, IdentityHasTrivialKernel) { EXPECT_EQ(integer_kernel(IntMatrix::identity(3)).rank(), 0u); }

TEST(IntegerKernel, ColumnOfOnesHasRankTwo) {
    IntMatrix m = M({{1}, {1}, {1}});
    Sublattice k = integer_kernel(m);
    EXPECT_EQ(k.rank(), 2u);
    auto small = oracle::small_kernel_vectors(m, 3);
    for (const auto& v : small) EXPECT_TRUE(k.contains(v));
    EXPECT_EQ(oracle::rank_of(small, 3), 2u);
}

TEST(IntegerKernel, ProjectivePlaneDualMap) {
    // rows are the rays (-1,-1), (1,0), (0,1)
    Sublattice k = integer_kernel(M({{-1, -1}, {1, 0}, {0, 1}}));
    ASSERT_EQ(k.rank(), 1u);
    EXPECT_EQ(k.basis().row(0), (IntVector{1, 1, 1}));
}

TEST(IntegerKernel, RandomAgainstBoxSearch) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 2 + rng() % 3, c = 1 + rng() % 2;
        IntMatrix m = random_matrix(rng, r, c, -3, 3);
        Sublattice k = integer_kernel(m);
        for (std::size_t i = 0; i < k.rank(); ++i) EXPECT_TRUE(is_zero(vec_mul(k.basis().row(i), m)));
        auto small = oracle::small_kernel_vectors(m, 3);
        for (const auto& v : small) EXPECT_TRUE(k.contains(v));
        EXPECT_EQ(k.rank(), r - rank(m));
    }
}

TEST(DualLattice, StandardLatticeIsSelfDual) {
    Sublattice z2 = Sublattice::generated_by(IntMatrix::identity(2));
    RationalLattice d = dual_lattice(z2);
    EXPECT_EQ(d.denominator(), 1);
    EXPECT_EQ(d.scaled(), z2);
}

TEST(DualLattice, TrivialLatticeIsRejected) {
    EXPECT_THROW(dual_lattice(Sublattice(3)), Error);
}

TEST(DualLattice, HalfIntegralDual) {
    // h1 + h2 even
    Sublattice s = Sublattice::generated_by(M({{1, 1, 0}, {0, 2, 0}, {0, 0, 1}}));
    RationalLattice d = dual_lattice(s);
    EXPECT_EQ(d.denominator(), 2);
    EXPECT_TRUE(d.contains({Rat(1, 2), Rat(1, 2), 0}));
    EXPECT_TRUE(d.contains({Rat(1, 2), Rat(-1, 2), 1}));
    EXPECT_FALSE(d.contains({Rat(1, 2), 0, 0}));
    EXPECT_FALSE(d.contains({0, 0, Rat(1, 2)}));
}

TEST(DualLattice, MatchesBoxEnumeration) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = random_matrix(rng, 2, 3, -3, 3);
        Sublattice s = Sublattice::generated_by(m);
        if (s.rank() == 0) continue;
        RationalLattice d = dual_lattice(s);
        long den = static_cast<long>(d.denominator());
        if (den > 12) continue;
        auto piv = s.pivots();
        auto brute = oracle::small_dual_vectors(s.basis(), piv, den, 2 * den);
        for (const auto& x : brute) EXPECT_TRUE(d.contains(x));
        for (const auto& b : d.basis()) {
            for (std::size_t i = 0; i < s.rank(); ++i) EXPECT_TRUE(is_integral(dot(to_rat(s.basis().row(i)), b)));
        }
    }
}

TEST(DualLattice, DoubleDualOfFullRank) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = random_matrix(rng, 3, 3, -4, 4);
        if (oracle::det(m) == 0) continue;
        Sublattice s = Sublattice::generated_by(m);
        RationalLattice back = dual_lattice(dual_lattice(s));
        EXPECT_EQ(back.denominator(), 1);
        EXPECT_EQ(back.scaled(), s);
    }
}

TEST(SolveRational, Identity) {
    auto x = solve_rational(IntMatrix::identity(2), RatVector{1, 2});
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, (RatVector{1, 2}));
}

TEST(SolveRational, Inconsistent) { EXPECT_FALSE(solve_rational(M({{1, 1}, {1, 1}}), RatVector{1, 2})); }

TEST(SolveRational, ConeLinearExtension) {
    IntMatrix m = M({{1, 0}, {-1, 2}});
    for (long h1 = -3; h1 <= 3; ++h1)
        for (long h2 = -3; h2 <= 3; ++h2) {
            auto x = solve_rational(m, RatVector{h1, h2});
            ASSERT_TRUE(x);
            EXPECT_EQ(*x, (RatVector{h1, Rat(h1 + h2, 2)}));
        }
}
