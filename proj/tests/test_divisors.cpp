#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toric/divisors.hpp"

using namespace toric;

namespace {

// Lattice generated by the small integer vectors passing a predicate.
Sublattice lattice_from_predicate(std::size_t n, long bound, const std::function<bool(const IntVector&)>& pred) {
    std::vector<IntVector> gens;
    oracle::for_each_box(n, -bound, bound, [&](const IntVector& h) {
        if (pred(h)) gens.push_back(h);
    });
    return Sublattice::generated_by(gens, n);
}

bool divisible(const Int& x, long m) { return x % m == 0; }

Label L(std::vector<Rat> x) { return {x}; }

}  // namespace

TEST(SupportLattice, QuadricCone) {
    SupportLattice sl = support_lattice(catalog("quadric", {}));
    Sublattice expected = lattice_from_predicate(3, 2, [](const IntVector& h) { return divisible(h[0] + h[1], 2); });
    EXPECT_EQ(sl.lattice, expected);
    EXPECT_EQ(sl.basis(), IntMatrix::from_rows({{1, 1, 0}, {0, 2, 0}, {0, 0, 1}}, 3));
}

TEST(SupportLattice, WeightedOneTwoThree) {
    SupportLattice sl = support_lattice(catalog("weighted", {1, 2, 3}));
    Sublattice expected = lattice_from_predicate(3, 6, [](const IntVector& h) {
        return divisible(h[1] + h[2], 2) && divisible(h[0] + 2 * h[2], 3) && divisible(2 * h[0] + h[2], 3);
    });
    EXPECT_EQ(sl.lattice, expected);
}

TEST(SupportLattice, TetrahedralSatisfiesSixEquations) {
    SupportLattice sl = support_lattice(catalog("tetrahedral", {}));
    EXPECT_EQ(sl.rank(), 4u);
    auto eqs = [](const IntVector& h) {
        return h[0] + h[1] == h[3] + h[6] && h[4] + h[5] == h[7] + h[2] && h[0] + h[2] == h[3] + h[5] &&
               h[4] + h[6] == h[7] + h[1] && h[1] + h[2] == h[3] + h[4] && h[5] + h[6] == h[7] + h[0];
    };
    for (std::size_t i = 0; i < sl.rank(); ++i) EXPECT_TRUE(eqs(sl.basis().row(i)));
    EXPECT_EQ(sl.lattice, lattice_from_predicate(8, 1, eqs));
    EXPECT_EQ(sl.pivots, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(SupportLattice, SmoothFansGiveEverything) {
    for (auto f : {catalog("projective", {2}), catalog("projective", {3}), catalog("hirzebruch", {2})}) {
        SupportLattice sl = support_lattice(f);
        EXPECT_EQ(sl.lattice, Sublattice::generated_by(IntMatrix::identity(f.num_rays()))) << f.name;
    }
}

TEST(SupportLattice, ContainsLinearFunctions) {
    for (auto f : {catalog("quadric", {}), catalog("weighted", {1, 2, 3}), catalog("tetrahedral", {}),
                   catalog("weighted", {1, 1, 1, 2})}) {
        SupportLattice sl = support_lattice(f);
        IntMatrix io = iota(f);
        for (std::size_t k = 0; k < f.rank; ++k) EXPECT_TRUE(sl.lattice.contains(io.row(k))) << f.name;
        EXPECT_EQ(picard(f, sl).free_rank, sl.rank() - f.rank) << f.name;
    }
}

TEST(SupportLattice, RejectsIncompleteFan) {
    EXPECT_THROW(support_lattice(make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}})), Error);
}

TEST(Dual, QuadricCone) {
    SupportLattice sl = support_lattice(catalog("quadric", {}));
    RationalLattice d = sl.dual();
    // x1, x2 in Z/2, x3 and x1 + x2 in Z
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            for (long c = -2; c <= 2; ++c) {
                RatVector x{Rat(a, 2), Rat(b, 2), Rat(c, 2)};
                bool expected = (c % 2 == 0) && ((a + b) % 2 == 0);
                EXPECT_EQ(d.contains(x), expected);
                EXPECT_EQ(sl.in_dual(x), expected);
            }
}

TEST(Dual, WeightedOneTwoThree) {
    SupportLattice sl = support_lattice(catalog("weighted", {1, 2, 3}));
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            for (long c = -6; c <= 6; ++c) {
                Rat x1(a, 3), x2(b, 2), x3(c, 6);
                bool expected = is_integral(x1 + 4 * x3) && is_integral(2 * x1 + 2 * x3) &&
                                is_integral(x2 + 3 * x3) && is_integral(x1 + x2 + x3);
                EXPECT_EQ(sl.in_dual({x1, x2, x3}), expected);
            }
}

TEST(Dual, TetrahedralIsIntegral) {
    SupportLattice sl = support_lattice(catalog("tetrahedral", {}));
    for (const auto& w : sl.dual_basis())
        for (const auto& x : w.coords) EXPECT_TRUE(is_integral(x));
}

TEST(Iota, ProjectiveSpace) {
    Fan f = catalog("projective", {3});
    RatVector x{5, 7, 11, 13};
    EXPECT_EQ(apply_iota_star(f, x), (RatVector{7 - 5, 11 - 5, 13 - 5}));
}

TEST(Iota, Hirzebruch) {
    for (long k = 0; k <= 3; ++k) {
        Fan f = catalog("hirzebruch", {k});
        RatVector x{2, 3, 5, 7};
        EXPECT_EQ(apply_iota_star(f, x), (RatVector{2 - 5, 3 + k * 5 - 7}));
    }
}

TEST(Iota, QuadricAndWeighted) {
    RatVector x{Rat(1, 2), Rat(3, 2), 4};
    EXPECT_EQ(apply_iota_star(catalog("quadric", {}), x), (RatVector{x[0] - x[1], 2 * x[1] - x[2]}));
    EXPECT_EQ(apply_iota_star(catalog("weighted", {1, 2, 3}), x), (RatVector{x[0] - 2 * x[2], x[1] - 3 * x[2]}));
    EXPECT_EQ(iota(catalog("quadric", {})), IntMatrix::from_rows({{1, -1, 0}, {0, 2, -1}}, 3));
}

TEST(Canonicalize, IdentityOnSimplicialFans) {
    SupportLattice sl = support_lattice(catalog("quadric", {}));
    RatVector x{Rat(1, 2), Rat(1, 2), 3};
    EXPECT_EQ(sl.canonicalize(x).coords, x);
}

TEST(Canonicalize, TetrahedralReducesToPivots) {
    Fan f = catalog("tetrahedral", {});
    SupportLattice sl = support_lattice(f);
    // sigma'_23 reduced using 12 + 13 - 123 - '23 in the annihilator
    EXPECT_EQ(sl.ray_label(6), L({1, 1, 0, -1, 0, 0, 0, 0}));
    EXPECT_EQ(sl.ray_label(7), L({1, 1, 1, -2, 0, 0, 0, 0}));
    for (std::size_t i = 0; i < 8; ++i) {
        RatVector e(8);
        e[i] = 1;
        Label l = sl.canonicalize(e);
        EXPECT_EQ(sl.canonicalize(l.coords), l);
        // pairing is preserved
        EXPECT_EQ(sl.pairings(l.coords), sl.pairings(e));
        for (std::size_t j = 4; j < 8; ++j) EXPECT_EQ(l.coords[j], 0);
    }
    EXPECT_THROW(sl.canonicalize(RatVector{Rat(1, 2), 0, 0, 0, 0, 0, 0, 0}), Error);
}

TEST(Picard, Goldens) {
    for (long k = 0; k <= 3; ++k) {
        auto g = picard(catalog("hirzebruch", {k}));
        EXPECT_EQ(g.free_rank, 2u);
        EXPECT_TRUE(g.torsion.empty());
    }
    for (auto w : std::vector<std::vector<long>>{{1, 1, 2}, {1, 2, 3}, {1, 1, 1, 2}, {1, 2, 2, 3}})
        EXPECT_EQ(picard(catalog("weighted", w)).free_rank, 1u);
    EXPECT_EQ(picard(catalog("tetrahedral", {})).free_rank, 1u);
    EXPECT_EQ(picard(catalog("projective", {2})).str(), "Z");
}

TEST(Pi1Variety, TrivialOnCatalog) {
    for (auto f : {catalog("projective", {1}), catalog("projective", {2}), catalog("hirzebruch", {2}),
                   catalog("quadric", {}), catalog("weighted", {1, 2, 3}), catalog("tetrahedral", {})}) {
        auto g = pi1_variety(f);
        EXPECT_EQ(g.free_rank, 0u) << f.name;
        EXPECT_TRUE(g.torsion.empty()) << f.name;
    }
    EXPECT_THROW(pi1_variety(make_fan(1, {{2}}, {{0}})), Error);
}

TEST(Pi2, ProjectiveSpace) {
    for (long n = 1; n <= 4; ++n) {
        auto p = pi2_lattice(catalog("projective", {n}));
        ASSERT_EQ(p.basis.size(), 1u);
        EXPECT_EQ(p.basis[0].coords, RatVector(static_cast<std::size_t>(n + 1), Rat(1)));
        EXPECT_TRUE(p.is_pi2);
    }
}

TEST(Pi2, WeightedSpacesArePrimitiveOnThePaperRay) {
    auto q = pi2_lattice(catalog("quadric", {}));
    ASSERT_EQ(q.basis.size(), 1u);
    EXPECT_EQ(q.basis[0], Rat(1, 2) * L({1, 1, 2}));
    EXPECT_FALSE(q.is_pi2);
    auto w = pi2_lattice(catalog("weighted", {1, 2, 3}));
    ASSERT_EQ(w.basis.size(), 1u);
    EXPECT_EQ(w.basis[0], Rat(1, 6) * L({2, 3, 1}));
}

TEST(Pi2, RankMatchesPicard) {
    for (auto f : {catalog("hirzebruch", {3}), catalog("tetrahedral", {}), catalog("weighted", {1, 1, 2, 3})}) {
        auto p = pi2_lattice(f);
        EXPECT_EQ(p.basis.size(), picard(f).free_rank) << f.name;
        for (const auto& l : p.basis) EXPECT_TRUE(in_kernel(f, l));
    }
}

TEST(HilbertBasis, SmoothCone) {
    EXPECT_EQ(hilbert_basis(std::vector<IntVector>{{1, 0}, {0, 1}}, 2), (std::vector<IntVector>{{0, 1}, {1, 0}}));
}

TEST(HilbertBasis, QuadricSingularCone) {
    SupportLattice sl = support_lattice(catalog("quadric", {}));
    auto hb = hilbert_basis(std::vector<Label>{sl.ray_label(0), sl.ray_label(1)}, sl);
    EXPECT_EQ(hb, (std::vector<Label>{L({0, 1, 0}), L({Rat(1, 2), Rat(1, 2), 0}), L({1, 0, 0})}));
}

TEST(HilbertBasis, WeightedCone13HasFourElements) {
    SupportLattice sl = support_lattice(catalog("weighted", {1, 2, 3}));
    auto hb = hilbert_basis(std::vector<Label>{sl.ray_label(0), sl.ray_label(2)}, sl);
    EXPECT_EQ(hb.size(), 4u);
}
