#pragma once

// Brute-force reference computations. Nothing here calls HNF, SNF or the
// parallelepiped machinery; they enumerate boxes and compare.

#include <functional>
#include <set>
#include <vector>

#include "toric/lattice.hpp"

namespace oracle {

using toric::Int;
using toric::IntMatrix;
using toric::IntVector;
using toric::Rat;
using toric::RatVector;

// Calls f on every integer vector of length n with entries in [lo, hi].
inline void for_each_box(std::size_t n, long lo, long hi, const std::function<void(const IntVector&)>& f) {
    IntVector v(n, Int(lo));
    if (n == 0) {
        f(v);
        return;
    }
    for (;;) {
        f(v);
        std::size_t i = 0;
        while (i < n && v[i] == hi) {
            v[i] = lo;
            ++i;
        }
        if (i == n) return;
        ++v[i];
    }
}

// Small solutions of k * m = 0.
inline std::vector<IntVector> small_kernel_vectors(const IntMatrix& m, long bound) {
    std::vector<IntVector> out;
    for_each_box(m.rows(), -bound, bound, [&](const IntVector& k) {
        if (toric::is_zero(toric::vec_mul(k, m))) out.push_back(k);
    });
    return out;
}

// Rank of a set of integer vectors by fraction-free elimination.
inline std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t n) {
    std::vector<RatVector> m;
    for (const auto& r : rows) m.push_back(toric::to_rat(r));
    std::size_t rk = 0;
    for (std::size_t c = 0; c < n && rk < m.size(); ++c) {
        std::size_t p = rk;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rk]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rk || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[rk][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[rk][j];
        }
        ++rk;
    }
    return rk;
}

// Cofactor determinant.
inline Int det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != j) minor(i - 1, kk++) = m(i, k);
        Int term = m(0, j) * det(minor);
        s += (j % 2 == 0) ? term : Int(-term);
    }
    return s;
}

inline void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

// gcd of all k×k minors.
inline Int minor_gcd(const IntMatrix& m, std::size_t k) {
    Int g = 0;
    combinations(m.rows(), k, [&](const std::vector<std::size_t>& ri) {
        combinations(m.cols(), k, [&](const std::vector<std::size_t>& ci) {
            g = toric::gcd_int(g, det(m.select_rows(ri).select_cols(ci)));
        });
    });
    return g;
}

// Rational vectors with denominators dividing den and numerators in the box,
// supported on the given columns, that pair integrally with every row of b.
inline std::set<RatVector> small_dual_vectors(const IntMatrix& b, const std::vector<std::size_t>& support, long den,
                                              long bound) {
    std::set<RatVector> out;
    for_each_box(support.size(), -bound, bound, [&](const IntVector& num) {
        RatVector x(b.cols());
        for (std::size_t k = 0; k < support.size(); ++k) x[support[k]] = Rat(num[k], den);
        for (std::size_t i = 0; i < b.rows(); ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < b.cols(); ++j) s += b(i, j) * x[j];
            if (!toric::is_integral(s)) return;
        }
        out.insert(x);
    });
    return out;
}

// Whether x is a nonnegative combination of gens, trying every subset of
// generators as a linear system.
inline bool in_cone(const std::vector<RatVector>& gens, const RatVector& x) {
    const std::size_t n = x.size();
    if (toric::is_zero(x)) return true;
    bool found = false;
    for (std::size_t k = 1; k <= std::min(gens.size(), n) && !found; ++k) {
        combinations(gens.size(), k, [&](const std::vector<std::size_t>& sub) {
            if (found) return;
            toric::RatMatrix a(n, k);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < n; ++i) a(i, j) = gens[sub[j]][i];
            auto sol = toric::solve_rational(a, x);
            if (!sol) return;
            for (const auto& c : *sol)
                if (c < 0) return;
            if (toric::mul_vec(a, *sol) == x) found = true;
        });
    }
    return found;
}

// Irreducible elements of (cone ∩ lattice), found by enumerating every
// lattice point c * basis of the cone with kappa-value at most the sum over
// the generators. The box for c is sized from the vertices of that region.
inline std::set<RatVector> brute_hilbert_basis(const std::vector<RatVector>& gens, const std::vector<RatVector>& basis,
                                               const RatVector& kappa) {
    const std::size_t n = gens.front().size();
    Rat cap = 0;
    for (const auto& g : gens) cap += toric::dot(kappa, g);
    toric::RatMatrix bt(n, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) bt(j, i) = basis[i][j];
    Rat bound = 0;
    for (const auto& g : gens) {
        RatVector vertex = toric::scale(g, cap / toric::dot(kappa, g));
        auto c = toric::solve_rational(bt, vertex);
        for (const auto& x : *c) bound = std::max(bound, x < 0 ? Rat(-x) : x);
    }
    long b = static_cast<long>(toric::ceil_rat(bound));
    std::vector<RatVector> pts;
    for_each_box(basis.size(), -b, b, [&](const IntVector& c) {
        RatVector x(n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) x[j] += Rat(c[i]) * basis[i][j];
        if (!toric::is_zero(x) && toric::dot(kappa, x) <= cap && in_cone(gens, x)) pts.push_back(x);
    });
    std::set<RatVector> all(pts.begin(), pts.end());
    std::set<RatVector> out;
    for (const auto& p : pts) {
        bool reducible = false;
        for (const auto& q : pts)
            if (q != p && all.count(toric::sub(p, q))) {
                reducible = true;
                break;
            }
        if (!reducible) out.insert(p);
    }
    return out;
}

}  // namespace oracle
