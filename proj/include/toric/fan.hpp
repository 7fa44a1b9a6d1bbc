#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

using RaySet = std::vector<std::size_t>;

struct Fan {
    std::size_t rank = 0;
    std::vector<IntVector> rays;
    std::vector<RaySet> max_cones;
    std::optional<std::string> lattice_note;
    std::string name;

    std::size_t num_rays() const { return rays.size(); }

    std::vector<IntVector> generators(const RaySet& s) const {
        std::vector<IntVector> g;
        for (auto i : s) g.push_back(rays[i]);
        return g;
    }
    std::vector<IntVector> generators(std::size_t cone) const { return generators(max_cones[cone]); }
};

struct Cone {
    RaySet ray_indices;
    IntMatrix generators;
};

inline Cone cone(const Fan& f, std::size_t i) {
    return {f.max_cones.at(i), IntMatrix::from_rows(f.generators(i), f.rank)};
}

// Builds a fan, normalizing rays to primitive vectors and cones to sorted
// index sets. With a lattice basis the rays are read in ambient coordinates
// and rewritten in that basis.
inline Fan make_fan(std::size_t rank, std::vector<IntVector> rays, std::vector<RaySet> cones,
                    const std::optional<IntMatrix>& lattice_basis = std::nullopt, std::string name = "") {
    Fan f;
    f.rank = rank;
    f.name = std::move(name);
    for (const auto& r : rays)
        if (r.size() != rank) fail("ray " + format_vector(r) + " has wrong length");
    if (lattice_basis) {
        const IntMatrix& b = *lattice_basis;
        if (b.rows() != rank || b.cols() != rank) fail("lattice basis must be a square matrix of size rank");
        if (determinant(b) == 0) fail("lattice basis is singular");
        for (auto& r : rays) {
            auto y = solve_left(to_rat(b), to_rat(r));
            if (!y) fail("ray " + format_vector(r) + " is not in the span of the lattice basis");
            for (const auto& c : *y)
                if (!is_integral(c)) fail("ray " + format_vector(r) + " is not in the lattice");
            r = to_int(*y);
        }
        std::string note = "rebased from lattice basis [";
        for (std::size_t i = 0; i < rank; ++i) note += (i ? ", " : "") + format_vector(b.row(i));
        f.lattice_note = note + "]";
    }
    for (auto& r : rays) {
        Int c = content(r);
        if (c == 0) fail("zero ray");
        for (auto& x : r) x /= c;
    }
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (rays[i] == rays[j]) fail("duplicate ray " + format_vector(rays[i]));
    std::vector<bool> used(rays.size(), false);
    for (auto& c : cones) {
        std::sort(c.begin(), c.end());
        if (c.empty()) fail("empty maximal cone");
        if (std::adjacent_find(c.begin(), c.end()) != c.end()) fail("repeated ray index in a cone");
        for (auto i : c) {
            if (i >= rays.size()) fail("ray index " + std::to_string(i) + " out of range");
            used[i] = true;
        }
    }
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (!used[i]) fail("ray " + std::to_string(i) + " lies in no maximal cone");
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = 0; j < cones.size(); ++j)
            if (i != j && std::includes(cones[j].begin(), cones[j].end(), cones[i].begin(), cones[i].end()))
                fail("maximal cone " + std::to_string(i) + " is contained in cone " + std::to_string(j));
    f.rays = std::move(rays);
    f.max_cones = std::move(cones);
    return f;
}

inline bool is_simplicial_set(const Fan& f, const RaySet& s) { return independent(f.generators(s), f.rank); }

inline bool is_simplicial(const Fan& f) {
    for (const auto& c : f.max_cones)
        if (!is_simplicial_set(f, c)) return false;
    return true;
}

// Index of the lattice spanned by the generators inside its saturation.
inline Int multiplicity(const Fan& f, const RaySet& s) {
    if (!is_simplicial_set(f, s)) fail("multiplicity requires a simplicial cone");
    if (s.empty()) return 1;
    IntMatrix g = IntMatrix::from_rows(f.generators(s), f.rank);
    if (s.size() == f.rank) return abs(determinant(g));
    // the saturation has index equal to the product of the invariant factors
    Int p = 1;
    for (const auto& d : invariant_factors(g)) p *= d;
    return p;
}

inline Int multiplicity(const Fan& f, const Cone& c) { return multiplicity(f, c.ray_indices); }

// Facets of a maximal cone, as global ray index sets with inward normals.
inline std::vector<Facet> cone_facets(const Fan& f, std::size_t cone) {
    auto local = facets(f.generators(cone), f.rank);
    for (auto& fc : local)
        for (auto& r : fc.rays) r = f.max_cones[cone][r];
    return local;
}

inline bool is_complete(const Fan& f) {
    if (f.max_cones.empty()) return false;
    std::map<RaySet, int> count;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        if (dimension(f.generators(c), f.rank) != f.rank) return false;
        for (const auto& fc : cone_facets(f, c)) ++count[fc.rays];
    }
    for (const auto& [rays, n] : count)
        if (n != 2) return false;
    return true;
}

inline bool is_smooth(const Fan& f) {
    for (const auto& c : f.max_cones)
        if (!is_simplicial_set(f, c) || multiplicity(f, c) != 1) return false;
    return true;
}

struct FanReport {
    bool is_simplicial = false;
    bool is_smooth = false;
    bool is_complete = false;
    std::vector<Int> multiplicities;  // per maximal cone; 0 marks a non-simplicial cone
};

// Point of R^r off every facet hyperplane of the fan.
inline IntVector generic_point(const Fan& f) {
    std::vector<IntVector> normals;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c)
        for (const auto& fc : cone_facets(f, c)) normals.push_back(fc.normal);
    for (long t = 2;; ++t) {
        IntVector w(f.rank);
        Int p = 1;
        for (std::size_t i = 0; i < f.rank; ++i) {
            w[i] = p;
            p *= t;
        }
        bool ok = true;
        for (const auto& n : normals)
            if (dot(n, w) == 0) ok = false;
        if (ok) return w;
    }
}

inline FanReport validate(const Fan& f) {
    for (std::size_t c = 0; c < f.max_cones.size(); ++c)
        if (!is_pointed(f.generators(c), f.rank)) fail("not strongly convex (cone " + std::to_string(c) + ")");
    if (!is_complete(f)) fail("fan not complete");
    // neighbours across a shared facet lie on opposite sides of it
    std::map<RaySet, std::vector<std::pair<std::size_t, IntVector>>> shared;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c)
        for (const auto& fc : cone_facets(f, c)) shared[fc.rays].push_back({c, fc.normal});
    for (const auto& [rays, sides] : shared) {
        const auto& [c0, n0] = sides[0];
        const auto& [c1, n1] = sides[1];
        for (auto i : f.max_cones[c1])
            if (!std::binary_search(rays.begin(), rays.end(), i) && dot(n0, f.rays[i]) >= 0)
                fail("cones overlap improperly (cones " + std::to_string(c0) + ", " + std::to_string(c1) + ")");
        for (auto i : f.max_cones[c0])
            if (!std::binary_search(rays.begin(), rays.end(), i) && dot(n1, f.rays[i]) >= 0)
                fail("cones overlap improperly (cones " + std::to_string(c0) + ", " + std::to_string(c1) + ")");
    }
    // a generic point is covered exactly once
    IntVector w = generic_point(f);
    int covering = 0;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        bool inside = true;
        for (const auto& fc : cone_facets(f, c))
            if (dot(fc.normal, w) <= 0) inside = false;
        if (inside) ++covering;
    }
    if (covering != 1) fail("cones overlap improperly (generic point covered " + std::to_string(covering) + " times)");

    FanReport r;
    r.is_complete = true;
    r.is_simplicial = is_simplicial(f);
    for (const auto& c : f.max_cones) r.multiplicities.push_back(is_simplicial_set(f, c) ? multiplicity(f, c) : Int(0));
    r.is_smooth = r.is_simplicial && std::all_of(r.multiplicities.begin(), r.multiplicities.end(),
                                                 [](const Int& m) { return m == 1; });
    return r;
}

inline bool is_face_set(const Fan& f, const RaySet& s) {
    for (const auto& c : f.max_cones)
        if (std::includes(c.begin(), c.end(), s.begin(), s.end())) return true;
    return false;
}

inline std::vector<RaySet> face_sets(const Fan& f) {
    std::set<RaySet> out;
    for (const auto& c : f.max_cones) {
        const std::size_t k = c.size();
        for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
            RaySet s;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ul << i)) s.push_back(c[i]);
            out.insert(s);
        }
    }
    return {out.begin(), out.end()};
}

inline std::vector<RaySet> minimal_nonfaces(const Fan& f) {
    std::set<RaySet> out;
    for (const auto& face : face_sets(f)) {
        std::size_t start = face.empty() ? 0 : face.back() + 1;
        for (std::size_t j = start; j < f.num_rays(); ++j) {
            RaySet s = face;
            s.push_back(j);
            if (is_face_set(f, s)) continue;
            bool minimal = true;
            for (std::size_t k = 0; k < s.size() && minimal; ++k) {
                RaySet t = s;
                t.erase(t.begin() + static_cast<long>(k));
                if (!is_face_set(f, t)) minimal = false;
            }
            if (minimal) out.insert(s);
        }
    }
    return {out.begin(), out.end()};
}

// Position of each ray of b in a, if the two fans agree up to ray order.
inline std::optional<std::vector<std::size_t>> match_fans(const Fan& a, const Fan& b) {
    if (a.rank != b.rank || a.num_rays() != b.num_rays() || a.max_cones.size() != b.max_cones.size())
        return std::nullopt;
    std::vector<std::size_t> pos;
    for (const auto& r : b.rays) {
        auto it = std::find(a.rays.begin(), a.rays.end(), r);
        if (it == a.rays.end()) return std::nullopt;
        pos.push_back(static_cast<std::size_t>(it - a.rays.begin()));
    }
    std::set<RaySet> ca(a.max_cones.begin(), a.max_cones.end());
    for (const auto& c : b.max_cones) {
        RaySet m;
        for (auto i : c) m.push_back(pos[i]);
        std::sort(m.begin(), m.end());
        if (!ca.count(m)) return std::nullopt;
    }
    return pos;
}

inline bool same_fan(const Fan& a, const Fan& b) { return match_fans(a, b).has_value(); }

// ---- catalog ---------------------------------------------------------------

namespace detail {

inline IntVector unit(std::size_t n, std::size_t i, long s = 1) {
    IntVector v(n, 0);
    v[i] = s;
    return v;
}

inline std::vector<RaySet> all_subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<RaySet> out;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace detail

inline Fan catalog(const std::string& name, const std::vector<long>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            fail("catalog " + name + " expects " + std::to_string(k) + " parameter" + (k == 1 ? "" : "s"));
    };
    if (name == "projective") {
        need(1);
        if (params[0] < 1) fail("projective space needs n >= 1");
        std::size_t n = static_cast<std::size_t>(params[0]);
        std::vector<IntVector> rays{IntVector(n, -1)};
        for (std::size_t i = 0; i < n; ++i) rays.push_back(detail::unit(n, i));
        return make_fan(n, rays, detail::all_subsets_of_size(n + 1, n), std::nullopt,
                        "projective " + std::to_string(n));
    }
    if (name == "hirzebruch") {
        need(1);
        long k = params[0];
        if (k < 0) fail("hirzebruch surface needs k >= 0");
        return make_fan(2, {{1, 0}, {0, 1}, {-1, k}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, std::nullopt,
                        "hirzebruch " + std::to_string(k));
    }
    if (name == "weighted") {
        if (params.size() < 2) fail("weighted projective space needs at least two weights");
        if (params[0] != 1) fail("weighted projective space needs a0 = 1");
        for (long a : params)
            if (a < 1) fail("weights must be positive");
        std::size_t n = params.size() - 1;
        std::vector<IntVector> rays;
        for (std::size_t i = 0; i < n; ++i) rays.push_back(detail::unit(n, i));
        IntVector last(n);
        for (std::size_t i = 0; i < n; ++i) last[i] = -params[i + 1];
        rays.push_back(last);
        std::string label = "weighted";
        for (long a : params) label += " " + std::to_string(a);
        return make_fan(n, rays, detail::all_subsets_of_size(n + 1, n), std::nullopt, label);
    }
    if (name == "quadric") {
        need(0);
        return make_fan(2, {{1, 0}, {-1, 2}, {0, -1}}, {{0, 1}, {1, 2}, {0, 2}}, std::nullopt, "quadric");
    }
    if (name == "tetrahedral") {
        need(0);
        // v12, v13, v23, v123 followed by their negatives
        std::vector<IntVector> rays{{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}, {1, 1, 1}};
        for (std::size_t i = 0; i < 4; ++i) rays.push_back(scale(rays[i], Int(-1)));
        std::vector<RaySet> cones;
        for (std::size_t axis = 0; axis < 3; ++axis)
            for (long sign : {1, -1}) {
                RaySet c;
                for (std::size_t i = 0; i < 8; ++i)
                    if (rays[i][axis] == sign) c.push_back(i);
                cones.push_back(c);
            }
        IntMatrix basis = IntMatrix::from_rows({{1, 1, 1}, {0, 2, 0}, {0, 0, 2}}, 3);
        return make_fan(3, rays, cones, basis, "tetrahedral");
    }
    fail_usage("unknown catalog name '" + name + "'");
}

}  // namespace toric
