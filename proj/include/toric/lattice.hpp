#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/error.hpp"

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) fail_usage("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix m(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
        return m;
    }
    Matrix select_cols(const std::vector<std::size_t>& idx) const {
        Matrix m(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }
    // row i += f * row k
    void add_row(std::size_t i, std::size_t k, const T& f) {
        if (f == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) += f * (*this)(k, j);
    }
    void add_col(std::size_t j, std::size_t k, const T& f) {
        if (f == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) += f * (*this)(i, k);
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }
    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
    }

    bool is_zero_row(std::size_t i) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail_usage("matrix dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

// ---- small helpers -------------------------------------------------------

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& x) {
    return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

inline Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

inline bool is_integral(const Rat& x) { return boost::multiprecision::denominator(x) == 1; }

inline Int as_int(const Rat& x) {
    if (!is_integral(x)) fail("expected an integer, got " + x.str());
    return boost::multiprecision::numerator(x);
}

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int l = a / gcd_int(a, b) * b;
    return l < 0 ? Int(-l) : l;
}

// g = x*a + y*b with g = gcd(a, b) >= 0
struct Xgcd {
    Int g, x, y;
};

inline Xgcd xgcd(const Int& a, const Int& b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

inline Int content(const IntVector& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd_int(g, x);
    return g;
}

inline RatVector to_rat(const IntVector& v) { return RatVector(v.begin(), v.end()); }

inline RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

inline Int common_denominator(const RatVector& v) {
    Int d = 1;
    for (const auto& x : v) d = lcm_int(d, boost::multiprecision::denominator(x));
    return d;
}

inline IntVector to_int(const RatVector& v) {
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(as_int(x));
    return out;
}

template <typename T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

template <typename T>
std::vector<T> sub(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

template <typename T, typename S>
std::vector<T> scale(const std::vector<T>& a, const S& f) {
    std::vector<T> c(a);
    for (auto& x : c) x *= f;
    return c;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <typename T>
bool is_zero(const std::vector<T>& v) {
    return std::all_of(v.begin(), v.end(), [](const T& x) { return x == 0; });
}

// row vector times matrix
template <typename T>
std::vector<T> vec_mul(const std::vector<T>& x, const Matrix<T>& m) {
    std::vector<T> y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
    }
    return y;
}

// matrix times column vector
template <typename T>
std::vector<T> mul_vec(const Matrix<T>& m, const std::vector<T>& x) {
    std::vector<T> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
    return y;
}

template <typename T>
std::string to_string(const T& x) {
    return x.str();
}

inline std::string format_vector(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

inline std::string format_vector(const RatVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

// ---- Hermite normal form -------------------------------------------------

struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};

// Row-style HNF: positive pivots, entries above a pivot reduced into [0, pivot),
// zero rows at the bottom.
inline HnfResult hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        for (std::size_t i = r + 1; i < h.rows(); ++i) {
            if (h(i, c) == 0) continue;
            Int a = h(r, c), b = h(i, c);
            Xgcd e = xgcd(a, b);
            Int p = a / e.g, q = b / e.g;
            for (IntMatrix* t : {&h, &u}) {
                for (std::size_t j = 0; j < t->cols(); ++j) {
                    Int x = (*t)(r, j), y = (*t)(i, j);
                    (*t)(r, j) = e.x * x + e.y * y;
                    (*t)(i, j) = p * y - q * x;
                }
            }
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int f = floor_div(h(i, c), h(r, c));
            if (f != 0) {
                h.add_row(i, r, -f);
                u.add_row(i, r, -f);
            }
        }
        ++r;
    }
    return {h, u};
}

inline std::size_t rank(const IntMatrix& m) {
    IntMatrix h = hnf(m).h;
    std::size_t r = 0;
    while (r < h.rows() && !h.is_zero_row(r)) ++r;
    return r;
}

// ---- Smith normal form ---------------------------------------------------

struct SnfResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
};

inline SnfResult snf(const IntMatrix& m) {
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < d.rows(); ++i)
                for (std::size_t j = t; j < d.cols(); ++j)
                    if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
            if (!found) goto done;
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                Int q = d(i, t) / d(t, t);
                d.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                Int q = d(t, j) / d(t, t);
                d.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold an offending row into row t
            bool divides = true;
            for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
done:
    return {d, u, v};
}

// Nonzero diagonal of the Smith form.
inline std::vector<Int> invariant_factors(const IntMatrix& m) {
    IntMatrix d = snf(m).d;
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d(i, i) != 0) out.push_back(d(i, i));
    return out;
}

// ---- sublattices ---------------------------------------------------------

class Sublattice {
public:
    Sublattice() = default;
    explicit Sublattice(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    // Lattice generated by the rows of gens.
    static Sublattice generated_by(const IntMatrix& gens) {
        Sublattice s(gens.cols());
        IntMatrix h = hnf(gens).h;
        std::size_t r = 0;
        while (r < h.rows() && !h.is_zero_row(r)) ++r;
        std::vector<std::size_t> keep(r);
        for (std::size_t i = 0; i < r; ++i) keep[i] = i;
        s.basis_ = h.select_rows(keep);
        return s;
    }

    static Sublattice generated_by(const std::vector<IntVector>& gens, std::size_t ambient) {
        return generated_by(IntMatrix::from_rows(gens, ambient));
    }

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }

    // Column of the leading entry of each basis row.
    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> p;
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t j = 0;
            while (basis_(i, j) == 0) ++j;
            p.push_back(j);
        }
        return p;
    }

    // Coefficients of x in the basis, if x lies in the lattice.
    std::optional<IntVector> coordinates(const IntVector& x) const {
        IntVector rest = x;
        IntVector c(rank());
        auto piv = pivots();
        for (std::size_t i = 0; i < rank(); ++i) {
            const Int& p = basis_(i, piv[i]);
            if (rest[piv[i]] % p != 0) return std::nullopt;
            c[i] = rest[piv[i]] / p;
            for (std::size_t j = 0; j < ambient_; ++j) rest[j] -= c[i] * basis_(i, j);
        }
        if (!is_zero(rest)) return std::nullopt;
        return c;
    }

    bool contains(const IntVector& x) const { return coordinates(x).has_value(); }

    friend bool operator==(const Sublattice& a, const Sublattice& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    IntMatrix basis_;
};

// Integer row vectors k with k * m = 0.
inline Sublattice integer_kernel(const IntMatrix& m) {
    HnfResult r = hnf(m);
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < r.h.rows(); ++i)
        if (r.h.is_zero_row(i)) rows.push_back(r.u.row(i));
    if (rows.empty()) return Sublattice(m.rows());
    return Sublattice::generated_by(rows, m.rows());
}

// ---- rational linear algebra ---------------------------------------------

struct RowEchelon {
    RatMatrix m;
    std::vector<std::size_t> pivots;
};

inline RowEchelon rref(RatMatrix m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        Rat inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m(i, c) != 0) m.add_row(i, r, -m(i, c));
        piv.push_back(c);
        ++r;
    }
    return {m, piv};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

// One solution x of m * x = rhs, or nothing when inconsistent.
inline std::optional<RatVector> solve_rational(const RatMatrix& m, const RatVector& rhs) {
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    RowEchelon e = rref(aug);
    RatVector x(m.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] == m.cols()) return std::nullopt;
        x[e.pivots[k]] = e.m(k, m.cols());
    }
    return x;
}

inline std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& rhs) {
    return solve_rational(to_rat(m), rhs);
}

// One solution y of y * m = rhs (row combination).
inline std::optional<RatVector> solve_left(const RatMatrix& m, const RatVector& rhs) {
    return solve_rational(m.transpose(), rhs);
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) fail_usage("inverse of a non-square matrix");
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RowEchelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
    return inv;
}

inline Rat determinant(RatMatrix m) {
    const std::size_t n = m.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            m.swap_rows(c, p);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i)
            if (m(i, c) != 0) m.add_row(i, c, -m(i, c) / m(c, c));
    }
    return det;
}

inline Int determinant(const IntMatrix& m) { return as_int(determinant(to_rat(m))); }

// Basis of {x : m * x = 0} over Q, as rows.
inline std::vector<RatVector> nullspace(const RatMatrix& m) {
    RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVector> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector x(m.cols());
        x[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = -e.m(k, f);
        out.push_back(x);
    }
    return out;
}

inline IntVector primitive(const RatVector& x) {
    Int d = common_denominator(x);
    IntVector v;
    for (const auto& c : x) v.push_back(as_int(c * d));
    Int g = content(v);
    if (g > 1)
        for (auto& c : v) c /= g;
    return v;
}

// ---- rational lattices ---------------------------------------------------

// A lattice of rational vectors stored as (minimal denominator N, HNF of N * L).
class RationalLattice {
public:
    RationalLattice() = default;

    static RationalLattice generated_by(const std::vector<RatVector>& gens, std::size_t ambient) {
        Int n = 1;
        for (const auto& g : gens) n = lcm_int(n, common_denominator(g));
        std::vector<IntVector> rows;
        for (const auto& g : gens) {
            IntVector r;
            for (const auto& x : g) r.push_back(as_int(x * n));
            rows.push_back(r);
        }
        RationalLattice l;
        l.scaled_ = rows.empty() ? Sublattice(ambient) : Sublattice::generated_by(rows, ambient);
        Int c = 0;
        for (std::size_t i = 0; i < l.scaled_.rank(); ++i) c = gcd_int(c, content(l.scaled_.basis().row(i)));
        Int g = gcd_int(n, c);
        if (g > 1) {
            std::vector<IntVector> red;
            for (std::size_t i = 0; i < l.scaled_.rank(); ++i) red.push_back(scale(l.scaled_.basis().row(i), Int(1)));
            for (auto& r : red)
                for (auto& x : r) x /= g;
            l.scaled_ = Sublattice::generated_by(red, ambient);
            n /= g;
        }
        l.denominator_ = n;
        return l;
    }

    std::size_t ambient_rank() const { return scaled_.ambient_rank(); }
    std::size_t rank() const { return scaled_.rank(); }
    const Int& denominator() const { return denominator_; }
    const Sublattice& scaled() const { return scaled_; }

    std::vector<RatVector> basis() const {
        std::vector<RatVector> out;
        for (std::size_t i = 0; i < scaled_.rank(); ++i) {
            RatVector r;
            for (const auto& x : scaled_.basis().row(i)) r.push_back(Rat(x, denominator_));
            out.push_back(r);
        }
        return out;
    }

    bool contains(const RatVector& x) const {
        IntVector v;
        for (const auto& c : x) {
            Rat s = c * denominator_;
            if (!is_integral(s)) return false;
            v.push_back(as_int(s));
        }
        return scaled_.contains(v);
    }

    friend bool operator==(const RationalLattice& a, const RationalLattice& b) {
        return a.denominator_ == b.denominator_ && a.scaled_ == b.scaled_;
    }

private:
    Int denominator_ = 1;
    Sublattice scaled_;
};

// Vectors supported on the HNF pivot columns of s that pair integrally with s.
inline RationalLattice dual_lattice(const Sublattice& s) {
    if (s.rank() == 0) fail("dual of trivial lattice");
    auto piv = s.pivots();
    RatMatrix bp = to_rat(s.basis().select_cols(piv));
    RatMatrix inv = *inverse(bp);
    std::vector<RatVector> gens;
    for (std::size_t j = 0; j < s.rank(); ++j) {
        RatVector x(s.ambient_rank());
        for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = inv(k, j);
        gens.push_back(x);
    }
    return RationalLattice::generated_by(gens, s.ambient_rank());
}

// Dual of a rational lattice of full rank: the integral pairing lattice.
inline RationalLattice dual_lattice(const RationalLattice& l) {
    const std::size_t n = l.ambient_rank();
    if (l.rank() == 0) fail("dual of trivial lattice");
    if (l.rank() != n) fail("double dual requires a full-rank lattice");
    RatMatrix b(n, n);
    auto rows = l.basis();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = rows[i][j];
    RatMatrix inv = *inverse(b);
    std::vector<RatVector> gens;
    for (std::size_t j = 0; j < n; ++j) gens.push_back(inv.col(j));
    return RationalLattice::generated_by(gens, n);
}

}  // namespace toric
