#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Gaussian rational re + im i.
struct Gauss {
    Rat re, im;

    Gauss() = default;
    Gauss(Rat r, Rat i = 0) : re(std::move(r)), im(std::move(i)) {}
    Gauss(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Gauss conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }

    friend Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gauss operator-(const Gauss& a, const Gauss& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gauss operator-(const Gauss& a) { return {-a.re, -a.im}; }
    friend Gauss operator*(const Gauss& a, const Gauss& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gauss operator/(const Gauss& a, const Gauss& b) {
        if (b.is_zero()) fail("division by zero");
        Rat n = b.norm();
        Gauss p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
    friend bool operator<(const Gauss& a, const Gauss& b) { return a.re != b.re ? a.re < b.re : a.im < b.im; }

    std::string str() const {
        if (im == 0) return re.str();
        std::string i = (im == 1) ? "i" : (im == -1) ? "-i" : im.str() + "i";
        if (re == 0) return i;
        return re.str() + (im > 0 ? "+" : "") + i;
    }
};

inline Rat parse_rat(const std::string& s) {
    if (s.empty()) fail_usage("empty number");
    std::size_t slash = s.find('/');
    try {
        std::size_t pos = (s[0] == '+') ? 1 : 0;
        if (slash == std::string::npos) return Rat(Int(s.substr(pos)));
        Int den(s.substr(slash + 1));
        if (den == 0) fail_usage("zero denominator in '" + s + "'");
        return Rat(Int(s.substr(pos, slash - pos)), den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail_usage("malformed number '" + s + "'");
    }
}

// Accepts "a", "bi", "a+bi", "a-bi" with rational a, b ("3/2-1/2i").
inline Gauss parse_gauss(std::string s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (t.empty()) fail_usage("empty number");
    if (t.back() != 'i') return {parse_rat(t), 0};
    t.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;)
        if (t[k] == '+' || t[k] == '-') {
            split = k;
            break;
        }
    std::string re = split == std::string::npos ? "" : t.substr(0, split);
    std::string im = split == std::string::npos ? t : t.substr(split);
    Rat imv;
    if (im.empty() || im == "+") imv = 1;
    else if (im == "-") imv = -1;
    else imv = parse_rat(im);
    return {re.empty() ? Rat(0) : parse_rat(re), imv};
}

// Polynomial with Gaussian rational coefficients, constant term first.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Gauss> c) : c_(std::move(c)) { trim(); }
    static Poly constant(const Gauss& a) { return Poly({a}); }
    static Poly one() { return constant(1); }
    static Poly linear_root(const Gauss& z) { return Poly({-z, 1}); }

    static Poly from_roots(const std::vector<std::pair<Gauss, std::size_t>>& roots) {
        Poly p = one();
        for (const auto& [z, m] : roots) p = p * linear_root(z).pow(m);
        return p;
    }

    const std::vector<Gauss>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Gauss& leading() const { return c_.back(); }
    bool is_monic() const { return !is_zero() && leading() == Gauss(1); }
    bool is_one() const { return c_.size() == 1 && c_[0] == Gauss(1); }

    Poly monic() const {
        if (is_zero()) return *this;
        Gauss l = leading();
        std::vector<Gauss> c;
        for (const auto& x : c_) c.push_back(x / l);
        return Poly(c);
    }

    Gauss operator()(const Gauss& z) const {
        Gauss v;
        for (std::size_t k = c_.size(); k-- > 0;) v = v * z + c_[k];
        return v;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Gauss> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return Poly(c);
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Gauss> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
        return Poly(c);
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Gauss> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return Poly(c);
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(std::size_t n) const {
        Poly r = one(), b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    // a = q * b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) fail("polynomial division by zero");
        std::vector<Gauss> r = a.c_;
        std::vector<Gauss> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
        for (std::size_t k = q.size(); k-- > 0;) {
            Gauss f = r[k + b.c_.size() - 1] / b.leading();
            q[k] = f;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] = r[k + j] - f * b.c_[j];
        }
        return {Poly(q), Poly(r)};
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            std::string c = c_[k].str();
            if (c_[k].im != 0 && c_[k].re != 0) c = "(" + c + ")";
            std::string mono = k == 0 ? "" : k == 1 ? "z" : "z^" + std::to_string(k);
            std::string term;
            if (k == 0) term = c;
            else if (c_[k] == Gauss(1)) term = mono;
            else if (c_[k] == Gauss(-1)) term = "-" + mono;
            else term = c + "*" + mono;
            if (!s.empty()) s += (term[0] == '-') ? " - " + term.substr(1) : " + " + term;
            else s = term;
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Gauss> c_;
};

// Monic gcd by the Euclidean algorithm.
inline Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) fail("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace toric
