#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "oracles.hpp"
#include "toric/monoid.hpp"

using namespace toric;

namespace {

Label lab(std::initializer_list<Rat> xs) { return {RatVector(xs)}; }

// Cone-mode validity straight from the definition: some maximal cone whose
// unit ray pairings have y in their nonnegative span.
bool oracle_cone_valid(const Fan& f, const SupportLattice& sl, const RatVector& y) {
    for (const auto& c : f.max_cones) {
        std::vector<RatVector> g;
        for (auto i : c) {
            RatVector e(f.num_rays());
            e[i] = 1;
            g.push_back(sl.pairings(e));
        }
        if (oracle::in_cone(g, y)) return true;
    }
    return false;
}

// Valid nonzero lattice points in pairing coordinates within a box, and the
// ones not splitting into two valid nonzero points of the same box.
std::set<Label> oracle_simples(const Fan& f, long b) {
    SupportLattice sl = support_lattice(f);
    std::vector<IntVector> pts;
    std::set<IntVector> valid;
    oracle::for_each_box(sl.rank(), -b, b, [&](const IntVector& y) {
        if (is_zero(y)) return;
        if (oracle_cone_valid(f, sl, to_rat(y))) {
            pts.push_back(y);
            valid.insert(y);
        }
    });
    std::set<Label> out;
    for (const auto& p : pts) {
        bool split = false;
        for (const auto& q : pts)
            if (q != p && valid.count(sub(p, q))) {
                split = true;
                break;
            }
        if (!split) out.insert(sl.from_pairings(to_rat(p)));
    }
    return out;
}

std::set<Label> as_set(const std::vector<Label>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Monoid, QuadricSimplesBothSemantics) {
    Fan q = catalog("quadric", {});
    std::vector<Label> expect{lab({0, 0, 1}), lab({0, 1, 0}), lab({Rat(1, 2), Rat(1, 2), 0}), lab({1, 0, 0})};
    for (auto s : {Semantics::cone, Semantics::resolution}) {
        PartialMonoid pm(q, s);
        EXPECT_EQ(pm.simples(), expect) << to_string(s);
    }
}

TEST(Monoid, QuadricMembership) {
    Fan q = catalog("quadric", {});
    for (auto s : {Semantics::cone, Semantics::resolution}) {
        PartialMonoid pm(q, s);
        EXPECT_TRUE(pm.is_valid(lab({Rat(1, 2), Rat(1, 2), 0})));
        EXPECT_FALSE(pm.is_valid(lab({Rat(1, 2), Rat(1, 2), 1})));
        EXPECT_TRUE(pm.is_valid(lab({0, 0, 0})));
        EXPECT_THROW(pm.is_valid(lab({Rat(1, 3), 0, 0})), Error);
    }
}

TEST(Monoid, ProjectiveSimplesAreUnits) {
    for (long n : {1, 2, 3}) {
        Fan p = catalog("projective", {n});
        PartialMonoid pm(p, Semantics::cone);
        std::set<Label> units;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) units.insert(pm.lattice().ray_label(i));
        EXPECT_EQ(as_set(pm.simples()), units);
        for (const auto& s : pm.simples()) EXPECT_EQ(pm.grade(s), 1);
    }
}

TEST(Monoid, TetrahedralSimplesAreRayLabels) {
    Fan t = catalog("tetrahedral", {});
    for (auto s : {Semantics::cone, Semantics::resolution}) {
        PartialMonoid pm(t, s);
        std::set<Label> rays;
        for (std::size_t i = 0; i < 8; ++i) rays.insert(pm.lattice().ray_label(i));
        EXPECT_EQ(pm.simples().size(), 8u) << to_string(s);
        EXPECT_EQ(as_set(pm.simples()), rays) << to_string(s);
    }
}

TEST(Monoid, SimplesMatchBruteForce) {
    std::vector<std::pair<Fan, long>> cases{{catalog("weighted", {1, 2, 3}), 6},
                                            {catalog("quadric", {}), 4},
                                            {catalog("hirzebruch", {2}), 3},
                                            {catalog("weighted", {1, 1, 2}), 4}};
    for (const auto& [f, b] : cases) {
        PartialMonoid pm(f, Semantics::cone);
        EXPECT_EQ(as_set(pm.simples()), oracle_simples(f, b)) << f.name;
    }
}

TEST(Monoid, GradingPositiveOnSimples) {
    for (auto f : {catalog("weighted", {1, 2, 3}), catalog("quadric", {}), catalog("tetrahedral", {}),
                   catalog("hirzebruch", {3})}) {
        PartialMonoid pm(f, default_semantics(f));
        for (const auto& s : pm.simples()) EXPECT_GT(pm.grade(s), 0);
        EXPECT_TRUE(pm.lattice().lattice.contains(pm.grading()));
    }
}

TEST(Monoid, ConeValidityIsScalingInvariant) {
    Fan f = catalog("weighted", {1, 2, 3});
    PartialMonoid pm(f, Semantics::cone);
    oracle::for_each_box(3, -3, 3, [&](const IntVector& y) {
        Label l = pm.lattice().from_pairings(to_rat(y));
        for (long n : {2, 3}) EXPECT_EQ(pm.is_valid(l), pm.is_valid(Rat(n) * l));
        EXPECT_EQ(pm.is_valid(l), oracle_cone_valid(f, pm.lattice(), to_rat(y)));
    });
}

TEST(Monoid, ResolutionValidImpliesConeValid) {
    for (auto f : {catalog("weighted", {1, 2, 3}), catalog("quadric", {}), catalog("weighted", {1, 1, 2})}) {
        PartialMonoid cone(f, Semantics::cone), res(f, Semantics::resolution);
        oracle::for_each_box(cone.lattice().rank(), -3, 3, [&](const IntVector& y) {
            Label l = cone.lattice().from_pairings(to_rat(y));
            if (res.is_valid(l)) EXPECT_TRUE(cone.is_valid(l)) << l.str();
        });
    }
}

TEST(Monoid, SmoothSemanticsAgree) {
    Fan f = catalog("hirzebruch", {1});
    PartialMonoid cone(f, Semantics::cone), res(f, Semantics::resolution);
    EXPECT_EQ(cone.simples(), res.simples());
    oracle::for_each_box(4, -2, 2, [&](const IntVector& y) {
        Label l = cone.lattice().from_pairings(to_rat(y));
        EXPECT_EQ(cone.is_valid(l), res.is_valid(l));
    });
}

TEST(Monoid, ValidLabelsAreSumsOfSimples) {
    for (auto s : {Semantics::cone, Semantics::resolution}) {
        PartialMonoid pm(catalog("weighted", {1, 2, 3}), s);
        const auto& simples = pm.simples();
        Rat top = 0;
        for (const auto& x : simples) top = std::max(top, pm.grade(x));
        std::function<bool(const Label&)> splits = [&](const Label& l) {
            if (l.is_zero()) return true;
            for (const auto& x : simples) {
                Label rest = l - x;
                if (pm.grade(rest) < 0) continue;
                if (pm.lattice().in_dual(rest.coords) && pm.is_valid(rest) && splits(pm.canonical(rest.coords)))
                    return true;
            }
            return false;
        };
        for (const auto& l : pm.valid_labels(2 * top)) EXPECT_TRUE(splits(l)) << l.str();
    }
}
