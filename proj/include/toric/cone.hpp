#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Geometry of the cone spanned by a list of integer generators. Indices in
// the results refer to positions in the generator list.

inline std::size_t dimension(const std::vector<IntVector>& gens, std::size_t ambient) {
    if (gens.empty()) return 0;
    return rank(IntMatrix::from_rows(gens, ambient));
}

inline bool independent(const std::vector<IntVector>& gens, std::size_t ambient) {
    return dimension(gens, ambient) == gens.size();
}

// Calls f on each k-subset of {0..n-1} in lexicographic order; f returns
// false to stop.
inline void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct Facet {
    std::vector<std::size_t> rays;  // generators lying on the facet
    IntVector normal;               // inward normal inside the span of the cone
};

// Facets of the cone, each with its inward normal taken inside span(gens)
// so that it can be evaluated on any vector of that span.
inline std::vector<Facet> facets(const std::vector<IntVector>& gens, std::size_t ambient) {
    std::vector<Facet> out;
    const std::size_t d = dimension(gens, ambient);
    if (d == 0) return out;
    RatMatrix g = to_rat(IntMatrix::from_rows(gens, ambient));
    std::vector<RatVector> perp = nullspace(g);
    std::map<std::vector<std::size_t>, bool> seen;
    for_each_subset(gens.size(), d - 1, [&](const std::vector<std::size_t>& sub) {
        std::vector<RatVector> rows = perp;
        for (auto i : sub) rows.push_back(to_rat(gens[i]));
        RatMatrix m(rows.size(), ambient);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < ambient; ++j) m(i, j) = rows[i][j];
        if (rank(m) != ambient - 1) return true;
        IntVector n = primitive(nullspace(m).front());
        bool pos = false, neg = false;
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Int s = dot(n, gens[i]);
            if (s > 0) pos = true;
            if (s < 0) neg = true;
            if (s == 0) on.push_back(i);
        }
        if (pos && neg) return true;
        if (neg) n = scale(n, Int(-1));
        if (!pos && !neg) return true;  // cannot happen for a genuine hyperplane
        if (seen.emplace(on, true).second) out.push_back({on, n});
        return true;
    });
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.rays < b.rays; });
    return out;
}

// No line through the origin lies in the cone.
inline bool is_pointed(const std::vector<IntVector>& gens, std::size_t ambient) {
    const std::size_t d = dimension(gens, ambient);
    if (d == 0) return true;
    std::vector<IntVector> normals;
    for (const auto& f : facets(gens, ambient)) normals.push_back(f.normal);
    if (normals.empty()) return false;
    return dimension(normals, ambient) == d;
}

// Nonnegative coefficients of x on the generators, searching linearly
// independent subsets of full dimension in lexicographic order.
inline std::optional<RatVector> cone_coefficients(const std::vector<IntVector>& gens, std::size_t ambient,
                                                  const RatVector& x) {
    RatVector coeffs(gens.size());
    if (is_zero(x)) return coeffs;
    const std::size_t d = dimension(gens, ambient);
    std::optional<RatVector> found;
    for_each_subset(gens.size(), d, [&](const std::vector<std::size_t>& sub) {
        RatMatrix a(ambient, d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < ambient; ++i) a(i, j) = gens[sub[j]][i];
        if (rank(a) != d) return true;
        auto sol = solve_rational(a, x);
        if (!sol) return false;  // x is outside the span
        for (const auto& c : *sol)
            if (c < 0) return true;
        RatVector full(gens.size());
        for (std::size_t j = 0; j < d; ++j) full[sub[j]] = (*sol)[j];
        found = full;
        return false;
    });
    return found;
}

inline bool cone_contains(const std::vector<IntVector>& gens, std::size_t ambient, const RatVector& x) {
    return cone_coefficients(gens, ambient, x).has_value();
}

// Pulling triangulation: the lowest generator is joined to a triangulation of
// every facet not containing it. Returns simplices as sorted index lists.
inline std::vector<std::vector<std::size_t>> pulling_triangulation(const std::vector<IntVector>& gens,
                                                                   std::size_t ambient) {
    std::vector<std::vector<std::size_t>> out;
    std::function<void(const std::vector<std::size_t>&)> pull = [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVector> sub;
        for (auto i : idx) sub.push_back(gens[i]);
        if (independent(sub, ambient)) {
            out.push_back(idx);
            return;
        }
        for (const auto& f : facets(sub, ambient)) {
            if (std::find(f.rays.begin(), f.rays.end(), 0u) != f.rays.end()) continue;
            std::vector<std::size_t> face;
            for (auto k : f.rays) face.push_back(idx[k]);
            std::size_t before = out.size();
            pull(face);
            for (std::size_t s = before; s < out.size(); ++s) {
                out[s].insert(out[s].begin(), idx[0]);
            }
        }
    };
    std::vector<std::size_t> all(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) all[i] = i;
    pull(all);
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
}

// Lattice points of the half-open fundamental parallelepiped of a simplicial
// cone, in the saturation of the lattice spanned by the generators, with the
// rational coefficients of each point on the generators. Includes the origin.
struct ParallelepipedPoint {
    IntVector point;
    RatVector coefficients;
};

inline std::vector<ParallelepipedPoint> parallelepiped_points(const std::vector<IntVector>& gens, std::size_t ambient) {
    const std::size_t k = gens.size();
    if (!independent(gens, ambient)) fail("parallelepiped of a non-simplicial cone");
    if (k == 0) return {{IntVector(ambient), RatVector{}}};
    IntMatrix g = IntMatrix::from_rows(gens, ambient);
    // saturated lattice of the span: vectors orthogonal to the integer complement
    Sublattice comp = integer_kernel(g.transpose());
    Sublattice sat = comp.rank() == 0 ? Sublattice::generated_by(IntMatrix::identity(ambient))
                                      : integer_kernel(comp.basis().transpose());
    const IntMatrix& l = sat.basis();
    // a * l = g
    IntMatrix a(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        auto c = sat.coordinates(gens[i]);
        for (std::size_t j = 0; j < k; ++j) a(i, j) = (*c)[j];
    }
    RatMatrix ainv = *inverse(to_rat(a));
    SnfResult s = snf(a);
    RatMatrix vinv = *inverse(to_rat(s.v));
    std::vector<Int> mods;
    for (std::size_t i = 0; i < k; ++i) mods.push_back(s.d(i, i));
    std::vector<ParallelepipedPoint> out;
    IntVector t(k, 0);
    for (;;) {
        RatVector y = vec_mul(to_rat(t), vinv);
        RatVector c = vec_mul(y, ainv);
        for (auto& x : c) x -= Rat(floor_rat(x));
        RatVector p = vec_mul(vec_mul(c, to_rat(a)), to_rat(l));
        out.push_back({to_int(p), c});
        std::size_t i = 0;
        while (i < k && t[i] + 1 >= mods[i]) {
            t[i] = 0;
            ++i;
        }
        if (i == k) break;
        ++t[i];
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.point < y.point; });
    return out;
}

// Hilbert basis of cone(gens) ∩ Z^ambient. Generators need not be primitive
// or independent; the cone must be pointed.
inline std::vector<IntVector> hilbert_basis(const std::vector<IntVector>& gens, std::size_t ambient) {
    if (!is_pointed(gens, ambient)) fail("hilbert basis of a non-pointed cone");
    std::vector<IntVector> prim;
    for (const auto& g : gens) {
        if (is_zero(g)) continue;
        IntVector p = g;
        Int c = content(p);
        for (auto& x : p) x /= c;
        if (std::find(prim.begin(), prim.end(), p) == prim.end()) prim.push_back(p);
    }
    if (prim.empty()) return {};
    const std::size_t d = dimension(prim, ambient);
    std::vector<IntVector> cand = prim;
    for_each_subset(prim.size(), d, [&](const std::vector<std::size_t>& sub) {
        std::vector<IntVector> simplex;
        for (auto i : sub) simplex.push_back(prim[i]);
        if (!independent(simplex, ambient)) return true;
        for (const auto& p : parallelepiped_points(simplex, ambient))
            if (!is_zero(p.point) && std::find(cand.begin(), cand.end(), p.point) == cand.end())
                cand.push_back(p.point);
        return true;
    });
    std::vector<IntVector> out;
    for (const auto& x : cand) {
        bool reducible = false;
        for (const auto& y : cand) {
            if (y == x) continue;
            IntVector diff = sub(x, y);
            if (cone_contains(prim, ambient, to_rat(diff))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace toric
