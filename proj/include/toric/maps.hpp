#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/divisors.hpp"
#include "toric/poly.hpp"
#include "toric/resolve.hpp"

namespace toric {

using Roots = std::vector<std::pair<Gauss, std::size_t>>;

struct MapPoly {
    Poly poly;
    std::optional<Roots> roots;  // factored form, when known

    static MapPoly from_roots(Roots r) {
        // merge repeated roots and sort
        std::map<Gauss, std::size_t> m;
        for (const auto& [z, k] : r)
            if (k > 0) m[z] += k;
        Roots merged(m.begin(), m.end());
        return {Poly::from_roots(merged), merged};
    }
    static MapPoly from_coeffs(std::vector<Gauss> c) { return {Poly(std::move(c)), std::nullopt}; }
};

struct HolMap {
    std::vector<MapPoly> polys;
    Label degree;  // d_i = deg p_i
};

inline std::string format_set(const RaySet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

// Condition (X): the polynomials of every minimal non-face have no common root.
inline std::optional<RaySet> condition_x_violation(const Fan& f, const std::vector<Poly>& p) {
    for (const auto& s : minimal_nonfaces(f)) {
        Poly g = p[s[0]];
        for (std::size_t k = 1; k < s.size(); ++k) g = poly_gcd(g, p[s[k]]);
        if (s.size() == 1) g = g.monic();
        if (!g.is_one()) return s;
    }
    return std::nullopt;
}

// The same predicate read off factored inputs: no root shared by all
// polynomials of a minimal non-face.
inline std::optional<RaySet> condition_x_violation_roots(const Fan& f, const std::vector<Roots>& r) {
    for (const auto& s : minimal_nonfaces(f)) {
        std::set<Gauss> common;
        for (const auto& [z, m] : r[s[0]]) common.insert(z);
        for (std::size_t k = 1; k < s.size(); ++k) {
            std::set<Gauss> next;
            for (const auto& [z, m] : r[s[k]])
                if (common.count(z)) next.insert(z);
            common = next;
        }
        if (!common.empty()) return s;
    }
    return std::nullopt;
}

inline HolMap validate_map(const Fan& f, std::vector<MapPoly> polys) {
    if (!is_smooth(f) || !is_complete(f)) fail("maps are validated on smooth complete fans");
    if (polys.size() != f.num_rays())
        fail("expected " + std::to_string(f.num_rays()) + " polynomials, got " + std::to_string(polys.size()));
    std::vector<Poly> p;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (!polys[i].poly.is_monic()) fail("polynomial " + std::to_string(i) + " is not monic");
        p.push_back(polys[i].poly);
    }
    if (auto s = condition_x_violation(f, p)) fail("condition (X) violated at non-face " + format_set(*s));
    HolMap m;
    m.degree.coords.resize(f.num_rays());
    for (std::size_t i = 0; i < p.size(); ++i) m.degree.coords[i] = p[i].degree();
    if (!in_kernel(f, m.degree)) fail("degrees " + m.degree.str() + " not in ker iota*");
    m.polys = std::move(polys);
    return m;
}

struct ConfigPoint {
    Gauss z;
    Label label;
};

using Configuration = std::vector<ConfigPoint>;  // sorted by z

inline Configuration config_from_map(const HolMap& m) {
    std::map<Gauss, RatVector> pts;
    const std::size_t u = m.polys.size();
    for (std::size_t i = 0; i < u; ++i) {
        if (!m.polys[i].roots) fail("polynomial " + std::to_string(i) + " is not given in factored form");
        for (const auto& [z, k] : *m.polys[i].roots) {
            auto& l = pts.try_emplace(z, RatVector(u)).first->second;
            l[i] += Rat(static_cast<long>(k));
        }
    }
    Configuration c;
    for (const auto& [z, l] : pts) c.push_back({z, {l}});
    return c;
}

// Labels are valid on a smooth fan iff their ray coordinates are nonnegative
// integers supported on a cone.
inline HolMap map_from_config(const Fan& f, const Configuration& c) {
    const std::size_t u = f.num_rays();
    std::vector<Roots> roots(u);
    std::set<Gauss> seen;
    for (const auto& p : c) {
        if (!seen.insert(p.z).second) fail("configuration point " + p.z.str() + " repeated");
        if (p.label.coords.size() != u) fail("label " + p.label.str() + " has wrong length");
        if (p.label.is_zero()) fail("zero label at " + p.z.str());
        RaySet support;
        for (std::size_t i = 0; i < u; ++i) {
            const Rat& x = p.label.coords[i];
            if (x < 0 || !is_integral(x)) fail("invalid label " + p.label.str() + " at " + p.z.str());
            if (x > 0) support.push_back(i);
        }
        if (!is_face_set(f, support)) fail("invalid label " + p.label.str() + " at " + p.z.str());
        for (std::size_t i = 0; i < u; ++i)
            if (p.label.coords[i] > 0) roots[i].push_back({p.z, static_cast<std::size_t>(as_int(p.label.coords[i]))});
    }
    std::vector<MapPoly> polys;
    for (auto& r : roots) polys.push_back(MapPoly::from_roots(r));
    return validate_map(f, polys);
}

// ---- tuples of polynomials and monomial relations ------------------------

using PolyTuple = std::vector<Poly>;

// z_i = prod_j p_j^{<m_i, v_j> - min_k <m_k, v_j>}, with m_0 = 0 prepended.
struct Embedding {
    std::vector<IntVector> exponents;         // m_0 = 0, m_1, ..., m_N
    std::vector<std::vector<Int>> powers;     // powers[i][j]
};

inline Embedding monomial_data(const Fan& f, const std::vector<IntVector>& ms) {
    Embedding e;
    e.exponents.push_back(IntVector(f.rank));
    for (const auto& m : ms) {
        if (m.size() != f.rank) fail("exponent " + format_vector(m) + " has wrong length");
        e.exponents.push_back(m);
    }
    // the differences m_i - m_j must generate the lattice
    std::vector<IntVector> diffs(e.exponents.begin() + 1, e.exponents.end());
    Sublattice l = Sublattice::generated_by(diffs.empty() ? std::vector<IntVector>{IntVector(f.rank)} : diffs, f.rank);
    if (l.rank() != f.rank || !(l == Sublattice::generated_by(IntMatrix::identity(f.rank))))
        fail("exponents do not generate the lattice");
    const std::size_t n = e.exponents.size(), u = f.num_rays();
    e.powers.assign(n, std::vector<Int>(u));
    for (std::size_t j = 0; j < u; ++j) {
        Int lo = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Int v = dot(e.exponents[i], f.rays[j]);
            if (v < lo) lo = v;
        }
        for (std::size_t i = 0; i < n; ++i) e.powers[i][j] = dot(e.exponents[i], f.rays[j]) - lo;
    }
    return e;
}

inline Poly power_product(const std::vector<Poly>& p, const std::vector<Int>& b) {
    Poly q = Poly::one();
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (b[j] < 0) fail("negative exponent in power product");
        q = q * p[j].pow(static_cast<std::size_t>(b[j]));
    }
    return q;
}

inline PolyTuple embed(const Embedding& e, const HolMap& m) {
    std::vector<Poly> p;
    for (const auto& x : m.polys) p.push_back(x.poly);
    PolyTuple out;
    for (const auto& row : e.powers) out.push_back(power_product(p, row));
    return out;
}

// prod z_i^{lhs_i} = prod z_i^{rhs_i}
struct Relation {
    std::vector<std::size_t> lhs, rhs;
};

struct RelationFailure {
    std::size_t relation = 0;
    long coefficient = 0;  // degree of the first differing coefficient
    Gauss left, right;
};

inline std::optional<RelationFailure> check_relations(const PolyTuple& z, const std::vector<Relation>& rels) {
    auto side = [&](const std::vector<std::size_t>& e) {
        if (e.size() != z.size()) fail("relation has " + std::to_string(e.size()) + " exponents, tuple has " +
                                       std::to_string(z.size()) + " entries");
        Poly p = Poly::one();
        for (std::size_t i = 0; i < z.size(); ++i) p = p * z[i].pow(e[i]);
        return p;
    };
    for (std::size_t r = 0; r < rels.size(); ++r) {
        Poly a = side(rels[r].lhs), b = side(rels[r].rhs);
        if (a == b) continue;
        const auto &ca = a.coeffs(), &cb = b.coeffs();
        for (std::size_t k = 0; k < std::max(ca.size(), cb.size()); ++k) {
            Gauss x = k < ca.size() ? ca[k] : Gauss(0), y = k < cb.size() ? cb[k] : Gauss(0);
            if (x != y) return RelationFailure{r, static_cast<long>(k), x, y};
        }
    }
    return std::nullopt;
}

// ---- singular representation ---------------------------------------------

struct SingularRepresentation {
    std::vector<IntVector> exponents;  // b_i = T(tau_i)
    PolyTuple q;
    Label base_degree;                 // T*(D-hat)
};

inline SingularRepresentation singular_representation(const ResolutionChain& chain, const std::vector<IntVector>& taus,
                                                      const HolMap& m) {
    const Fan& fin = chain.final_fan();
    if (m.polys.size() != fin.num_rays()) fail("map does not live on the resolved fan");
    SingularRepresentation out;
    out.base_degree = pushforward_Tstar(chain, m.degree.coords);
    std::vector<Poly> p;
    for (const auto& x : m.polys) p.push_back(x.poly);
    for (std::size_t i = 0; i < taus.size(); ++i) {
        const IntVector& t = taus[i];
        for (const auto& x : t)
            if (x < 0) fail("generator " + format_vector(t) + " is not positive");
        IntVector b = pullback_T(chain, t);
        Poly q = power_product(p, b);
        Rat want = dot(to_rat(t), out.base_degree.coords);
        if (Rat(q.degree()) != want)
            fail("degree of q_" + std::to_string(i) + " is " + std::to_string(q.degree()) + ", expected " + want.str());
        out.exponents.push_back(b);
        out.q.push_back(q);
    }
    return out;
}

}  // namespace toric
