#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "toric/resolve.hpp"

namespace toric {

struct StabilityResult {
    Int n = 0;
    std::string method;
    std::string active;             // term attaining the final minimum
    std::optional<Rat> degree;      // inserted degree of the maximizing fiber element
    std::optional<std::size_t> j;   // its index in the fiber progression
};

inline std::string ray_term(std::size_t i) { return "ray " + std::to_string(i); }

inline StabilityResult stability_smooth(const Fan& f, const Label& d) {
    if (!is_smooth(f) || !is_complete(f)) fail("fan is not smooth and complete");
    if (d.coords.size() != f.num_rays()) fail("divisor has wrong length");
    StabilityResult r;
    r.method = "smooth";
    if (d.is_zero()) {
        r.active = "zero divisor";
        return r;
    }
    std::optional<std::size_t> arg;
    for (std::size_t i = 0; i < d.coords.size(); ++i) {
        if (d.coords[i] < 0) fail("divisor " + d.str() + " is not representable by holomorphic maps");
        if (!arg || d.coords[i] < d.coords[*arg]) arg = i;
    }
    r.n = floor_rat(d.coords[*arg]);
    r.active = ray_term(*arg);
    return r;
}

inline std::optional<Rat> step_coefficient(const ResolutionStep& s, std::size_t ray) {
    for (std::size_t k = 0; k < s.parent_cone.size(); ++k)
        if (s.parent_cone[k] == ray && s.coefficients[k] != 0) return s.coefficients[k];
    return std::nullopt;
}

inline StabilityResult stability_single_step(const ResolutionStep& s, const SupportLattice& upper, const Label& d) {
    if (!is_smooth(s.upper)) fail("single-step stability needs a smooth resolved fan");
    StepFiber fib = fiber_step(s, upper, d.coords);
    if (!fib.progression) fail("empty fiber");
    const auto& p = *fib.progression;
    StabilityResult r;
    r.method = "single-step";
    std::optional<Int> e;
    for (std::size_t j = 0; j <= p.m; ++j) {
        Rat dj = p.d0 + Rat(static_cast<long>(j)) * p.l;
        Int v = floor_rat(dj);
        for (std::size_t k = 0; k < s.parent_cone.size(); ++k)
            if (s.coefficients[k] != 0) v = std::min(v, floor_rat(d.coords[s.parent_cone[k]] - s.coefficients[k] * dj));
        if (!e || v > *e) {
            e = v;
            r.j = j;
            r.degree = dj;
        }
    }
    r.n = *e;
    r.active = "e";
    for (std::size_t i = 0; i < d.coords.size(); ++i) {
        if (step_coefficient(s, i)) continue;
        Int v = floor_rat(d.coords[i]);
        if (v < r.n) {
            r.n = v;
            r.active = ray_term(i);
        }
    }
    return r;
}

// Per-ray rates down a chain of insertions. At the top (smooth) level a ray
// of degree t stabilizes up to floor(t). Below, a ray i inside the cone of
// the next insertion splits t between itself and the inserted ray in every
// way the next lattice allows, and keeps the best of the two rates; rays
// outside that cone pass through.
class ChainedRates {
public:
    explicit ChainedRates(const ResolutionChain& chain) : chain_(chain) {
        for (std::size_t k = 0; k < chain.length(); ++k) den_.push_back(dual_denominator(chain.lattice(k + 1)));
    }

    Int rate(std::size_t level, std::size_t ray, const Rat& t) {
        if (level == chain_.length()) return floor_rat(t);
        const ResolutionStep& s = chain_.steps()[level];
        auto c = step_coefficient(s, ray);
        if (!c) return rate(level + 1, ray, t);
        auto key = std::make_tuple(level, ray, t);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const RationalLattice& pr = projection(level, ray);
        std::optional<Int> best;
        for (Int k = 0;; ++k) {
            Rat dd(k, den_[level]);
            if (*c * dd > t) break;
            if (!pr.contains(RatVector{t - *c * dd, dd})) continue;
            Int v = std::min(rate(level + 1, s.new_index(), dd), rate(level + 1, ray, t - *c * dd));
            if (!best || v > *best) best = v;
        }
        if (!best) fail("empty fiber in rate of ray " + std::to_string(ray));
        memo_.emplace(key, *best);
        return *best;
    }

private:
    // SF* of the fan above the step, projected to (ray, inserted ray).
    const RationalLattice& projection(std::size_t level, std::size_t ray) {
        auto key = std::make_pair(level, ray);
        auto it = proj_.find(key);
        if (it != proj_.end()) return it->second;
        const SupportLattice& up = chain_.lattice(level + 1);
        std::size_t nw = chain_.steps()[level].new_index();
        std::vector<RatVector> gens;
        for (const auto& l : up.dual_basis()) gens.push_back({l.coords[ray], l.coords[nw]});
        return proj_.emplace(key, RationalLattice::generated_by(gens, 2)).first->second;
    }

    const ResolutionChain& chain_;
    std::vector<Int> den_;
    std::map<std::tuple<std::size_t, std::size_t, Rat>, Int> memo_;
    std::map<std::pair<std::size_t, std::size_t>, RationalLattice> proj_;
};

inline StabilityResult stability_chained(const ResolutionChain& chain, const Label& d) {
    if (!chain.base_is_simplicial()) fail("chained stability needs a simplicial base fan");
    if (chain.length() == 0) return stability_smooth(chain.base_fan(), d);
    Label e = chain.base_lattice().canonicalize(d.coords);
    ChainedRates rates(chain);
    const ResolutionStep& s = chain.steps()[0];
    StepFiber fib = fiber_step(s, chain.lattice(1), e.coords);
    if (fib.elements.empty()) fail("empty fiber");
    StabilityResult r;
    r.method = chain.length() == 1 ? "single-step" : "chained-rate (extrapolated)";
    std::optional<Int> best;
    for (std::size_t j = 0; j < fib.elements.size(); ++j) {
        const RatVector& lift = fib.elements[j];
        Int v = rates.rate(1, s.new_index(), lift.back());
        for (std::size_t k = 0; k < s.parent_cone.size(); ++k)
            if (s.coefficients[k] != 0) v = std::min(v, rates.rate(1, s.parent_cone[k], lift[s.parent_cone[k]]));
        if (!best || v > *best) {
            best = v;
            r.j = j;
            r.degree = fib.degrees[j];
        }
    }
    r.n = *best;
    r.active = "e";
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        if (step_coefficient(s, i)) continue;
        if (e.coords[i] < 0) fail("divisor " + e.str() + " is not representable by holomorphic maps");
        Int v = rates.rate(1, i, e.coords[i]);
        if (v < r.n) {
            r.n = v;
            r.active = ray_term(i);
        }
    }
    return r;
}

// Dispatch on the fan: smooth, one insertion, or a longer chain.
inline StabilityResult stability(const ResolutionChain& chain, const Label& d) {
    if (!chain.base_is_simplicial()) fail("stability needs a simplicial base fan");
    if (chain.length() == 0) return stability_smooth(chain.base_fan(), d);
    if (chain.length() == 1 && chain.base_is_simplicial()) {
        Label e = chain.base_lattice().canonicalize(d.coords);
        return stability_single_step(chain.steps()[0], chain.lattice(1), e);
    }
    return stability_chained(chain, d);
}

}  // namespace toric
