#pragma once

#include <string>
#include <vector>

#include "toric/cone.hpp"
#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

// An element of SF(Delta)* in ray coordinates. Labels built through
// canonicalize vanish at the non-pivot columns of the SF basis.
struct Label {
    RatVector coords;

    friend bool operator==(const Label& a, const Label& b) { return a.coords == b.coords; }
    friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
    friend bool operator<(const Label& a, const Label& b) { return a.coords < b.coords; }
    friend Label operator+(const Label& a, const Label& b) { return {add(a.coords, b.coords)}; }
    friend Label operator-(const Label& a, const Label& b) { return {sub(a.coords, b.coords)}; }
    friend Label operator*(const Rat& k, const Label& a) { return {scale(a.coords, k)}; }

    bool is_zero() const { return toric::is_zero(coords); }
    std::string str() const { return format_vector(coords); }
};

struct SupportLattice {
    std::size_t num_rays = 0;
    Sublattice lattice;           // inside Z^u, coordinates h_i = h(v_i)
    std::vector<std::size_t> pivots;
    RatMatrix pivot_inverse;      // inverse of the basis restricted to the pivot columns

    std::size_t rank() const { return lattice.rank(); }
    const IntMatrix& basis() const { return lattice.basis(); }

    // Values of x on the basis of SF; integral exactly for x in SF*.
    RatVector pairings(const RatVector& x) const { return mul_vec(to_rat(lattice.basis()), x); }

    bool in_dual(const RatVector& x) const {
        for (const auto& p : pairings(x))
            if (!is_integral(p)) return false;
        return true;
    }

    // The label with prescribed values on the SF basis.
    Label from_pairings(const RatVector& y) const {
        RatVector xp = mul_vec(pivot_inverse, y);
        RatVector x(num_rays);
        for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = xp[k];
        return {x};
    }

    Label canonicalize(const RatVector& x) const {
        if (x.size() != num_rays) fail("label has " + std::to_string(x.size()) + " coordinates, expected " +
                                       std::to_string(num_rays));
        if (!in_dual(x)) fail("not in SF(Delta)*: " + format_vector(x));
        return from_pairings(pairings(x));
    }

    // Integer coordinates of a label in the dual basis.
    IntVector dual_coordinates(const Label& l) const { return to_int(pairings(l.coords)); }

    std::vector<Label> dual_basis() const {
        std::vector<Label> out;
        for (std::size_t j = 0; j < rank(); ++j) {
            RatVector e(rank());
            e[j] = 1;
            out.push_back(from_pairings(e));
        }
        return out;
    }

    // Unit label of ray i, canonicalized.
    Label ray_label(std::size_t i) const {
        RatVector e(num_rays);
        e[i] = 1;
        return canonicalize(e);
    }

    RationalLattice dual() const {
        std::vector<RatVector> gens;
        for (const auto& l : dual_basis()) gens.push_back(l.coords);
        return RationalLattice::generated_by(gens, num_rays);
    }
};

inline void require_complete(const Fan& f) {
    if (!is_complete(f)) fail("fan not complete");
}

inline SupportLattice support_lattice_unchecked(const Fan& f) {
    const std::size_t u = f.num_rays(), r = f.rank, nc = f.max_cones.size();
    // variables: h_1..h_u, then one covector m_sigma per maximal cone;
    // one equation h_i - <m_sigma, v_i> = 0 per (sigma, i in sigma)
    std::size_t eqs = 0;
    for (const auto& c : f.max_cones) eqs += c.size();
    IntMatrix sys(u + r * nc, eqs);
    std::size_t e = 0;
    for (std::size_t c = 0; c < nc; ++c)
        for (auto i : f.max_cones[c]) {
            sys(i, e) = 1;
            for (std::size_t k = 0; k < r; ++k) sys(u + r * c + k, e) = -f.rays[i][k];
            ++e;
        }
    Sublattice sol = integer_kernel(sys);
    std::vector<IntVector> proj;
    for (std::size_t i = 0; i < sol.rank(); ++i) {
        IntVector row = sol.basis().row(i);
        proj.push_back(IntVector(row.begin(), row.begin() + static_cast<long>(u)));
    }
    SupportLattice sl;
    sl.num_rays = u;
    sl.lattice = Sublattice::generated_by(proj, u);
    sl.pivots = sl.lattice.pivots();
    sl.pivot_inverse = *inverse(to_rat(sl.lattice.basis().select_cols(sl.pivots)));
    return sl;
}

inline SupportLattice support_lattice(const Fan& f) {
    require_complete(f);
    return support_lattice_unchecked(f);
}

// r x u: row k is (v_1[k], ..., v_u[k]), the coordinates of iota(e_k).
inline IntMatrix iota(const Fan& f) {
    IntMatrix m(f.rank, f.num_rays());
    for (std::size_t i = 0; i < f.num_rays(); ++i)
        for (std::size_t k = 0; k < f.rank; ++k) m(k, i) = f.rays[i][k];
    return m;
}

// u x r: x maps to x * iota_star(f) = sum x_i v_i.
inline IntMatrix iota_star(const Fan& f) { return iota(f).transpose(); }

inline RatVector apply_iota_star(const Fan& f, const RatVector& x) { return vec_mul(x, to_rat(iota_star(f))); }

inline bool in_kernel(const Fan& f, const Label& l) { return is_zero(apply_iota_star(f, l.coords)); }

struct DivisorClass {
    Label label;
    bool in_kernel = false;
};

inline DivisorClass divisor_class(const Fan& f, const SupportLattice& sl, const RatVector& x) {
    Label l = sl.canonicalize(x);
    return {l, in_kernel(f, l)};
}

struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    std::string str() const {
        std::vector<std::string> parts;
        for (const auto& t : torsion) parts.push_back("Z/" + t.str());
        if (free_rank == 1) parts.push_back("Z");
        if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
        if (parts.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
        return s;
    }
};

// Z^cols modulo the row space of m.
inline AbelianGroup cokernel(const IntMatrix& m) {
    AbelianGroup g;
    auto f = invariant_factors(m);
    g.free_rank = m.cols() - f.size();
    for (const auto& d : f)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

inline AbelianGroup picard(const Fan& f, const SupportLattice& sl) {
    IntMatrix io = iota(f);
    IntMatrix c(f.rank, sl.rank());
    for (std::size_t k = 0; k < f.rank; ++k) {
        auto coords = sl.lattice.coordinates(io.row(k));
        if (!coords) fail("linear function outside SF(Delta)");
        for (std::size_t j = 0; j < sl.rank(); ++j) c(k, j) = (*coords)[j];
    }
    return cokernel(c);
}

inline AbelianGroup picard(const Fan& f) { return picard(f, support_lattice(f)); }

inline AbelianGroup pi1_variety(const Fan& f) {
    require_complete(f);
    std::vector<IntVector> gens;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c)
        for (const auto& h : hilbert_basis(f.generators(c), f.rank)) gens.push_back(h);
    return cokernel(IntMatrix::from_rows(gens, f.rank));
}

struct CurveLattice {
    std::vector<Label> basis;
    bool is_pi2 = false;  // false: curve-class lattice modulo torsion
};

inline CurveLattice pi2_lattice(const Fan& f, const SupportLattice& sl) {
    auto w = sl.dual_basis();
    IntMatrix a(sl.rank(), f.rank);
    for (std::size_t j = 0; j < w.size(); ++j) {
        IntVector img = to_int(apply_iota_star(f, w[j].coords));
        for (std::size_t k = 0; k < f.rank; ++k) a(j, k) = img[k];
    }
    Sublattice ker = integer_kernel(a);
    CurveLattice out;
    out.is_pi2 = is_smooth(f);
    for (std::size_t i = 0; i < ker.rank(); ++i) {
        Label l{RatVector(f.num_rays())};
        IntVector k = ker.basis().row(i);
        for (std::size_t j = 0; j < w.size(); ++j) l = l + Rat(k[j]) * w[j];
        for (const auto& x : l.coords)
            if (x != 0) {
                if (x < 0) l = Rat(-1) * l;
                break;
            }
        out.basis.push_back(l);
    }
    return out;
}

inline CurveLattice pi2_lattice(const Fan& f) { return pi2_lattice(f, support_lattice(f)); }

// Hilbert basis of the cone spanned by labels, taken in SF(Delta)*.
inline std::vector<Label> hilbert_basis(const std::vector<Label>& gens, const SupportLattice& sl) {
    std::vector<IntVector> y;
    for (const auto& g : gens) y.push_back(sl.dual_coordinates(sl.canonicalize(g.coords)));
    std::vector<Label> out;
    for (const auto& h : hilbert_basis(y, sl.rank())) out.push_back(sl.from_pairings(to_rat(h)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace toric
