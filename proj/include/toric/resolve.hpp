#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "toric/cone.hpp"
#include "toric/divisors.hpp"
#include "toric/fan.hpp"

namespace toric {

// Star subdivision of every maximal cone containing v. The new ray gets the
// next free index; subdivided cones are replaced in place.
inline Fan insert_ray(const Fan& f, const IntVector& v) {
    if (v.size() != f.rank) fail("inserted ray has wrong length");
    if (is_zero(v) || content(v) != 1) fail("inserted ray " + format_vector(v) + " is not primitive");
    if (std::find(f.rays.begin(), f.rays.end(), v) != f.rays.end()) fail("ray " + format_vector(v) + " is already a ray");
    const std::size_t u = f.num_rays();
    std::vector<RaySet> cones;
    bool hit = false;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        if (!cone_contains(f.generators(c), f.rank, to_rat(v))) {
            cones.push_back(f.max_cones[c]);
            continue;
        }
        hit = true;
        for (const auto& fc : cone_facets(f, c)) {
            if (dot(fc.normal, v) == 0) continue;
            RaySet s = fc.rays;
            s.push_back(u);
            cones.push_back(s);
        }
    }
    if (!hit) fail("ray " + format_vector(v) + " is not in the support of the fan");
    std::vector<IntVector> rays = f.rays;
    rays.push_back(v);
    Fan g = make_fan(f.rank, rays, cones, std::nullopt, f.name);
    g.lattice_note = f.lattice_note;
    return g;
}

// Replaces every non-simplicial maximal cone by its pulling triangulation.
inline Fan triangulate(const Fan& f) {
    std::vector<RaySet> cones;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        if (is_simplicial_set(f, f.max_cones[c])) {
            cones.push_back(f.max_cones[c]);
            continue;
        }
        for (const auto& s : pulling_triangulation(f.generators(c), f.rank)) {
            RaySet g;
            for (auto i : s) g.push_back(f.max_cones[c][i]);
            cones.push_back(g);
        }
    }
    Fan g = make_fan(f.rank, f.rays, cones, std::nullopt, f.name);
    g.lattice_note = f.lattice_note;
    return g;
}

struct ResolutionStep {
    IntVector inserted_ray;
    RaySet parent_cone;      // rays of the subdivided maximal cone of the lower fan
    RatVector coefficients;  // inserted_ray = sum coefficients[k] * rays[parent_cone[k]]
    Fan lower;
    Fan upper;               // resulting fan

    std::size_t new_index() const { return lower.num_rays(); }
};

class ResolutionChain {
public:
    ResolutionChain() = default;
    explicit ResolutionChain(Fan base) : base_(std::move(base)) {
        require_complete(base_);
        simplicial_ = triangulate(base_);
        base_sl_ = support_lattice(base_);
        sl_.push_back(support_lattice(simplicial_));
    }

    const Fan& base_fan() const { return base_; }
    const Fan& simplicial_fan() const { return simplicial_; }
    const std::vector<ResolutionStep>& steps() const { return steps_; }
    std::size_t length() const { return steps_.size(); }

    // Fan after k steps; level 0 is the simplicialized base.
    const Fan& fan(std::size_t k) const { return k == 0 ? simplicial_ : steps_[k - 1].upper; }
    const SupportLattice& lattice(std::size_t k) const { return sl_[k]; }
    const Fan& final_fan() const { return fan(steps_.size()); }
    const SupportLattice& final_lattice() const { return sl_.back(); }
    const SupportLattice& base_lattice() const { return base_sl_; }
    bool base_is_simplicial() const { return is_simplicial(base_); }

    // Inserts v, expressed in the given maximal cone of the current final fan.
    const ResolutionStep& push(const RaySet& parent, const IntVector& v) {
        const Fan& cur = final_fan();
        RaySet p = parent;
        std::sort(p.begin(), p.end());
        if (std::find(cur.max_cones.begin(), cur.max_cones.end(), p) == cur.max_cones.end())
            fail("parent cone is not a maximal cone of the current fan");
        if (!is_simplicial_set(cur, p)) fail("parent cone is not simplicial");
        auto c = cone_coefficients(cur.generators(p), cur.rank, to_rat(v));
        if (!c) fail("inserted ray " + format_vector(v) + " is not in the parent cone");
        ResolutionStep s{v, p, *c, cur, insert_ray(cur, v)};
        steps_.push_back(s);
        sl_.push_back(support_lattice(steps_.back().upper));
        return steps_.back();
    }

private:
    Fan base_;
    Fan simplicial_;
    SupportLattice base_sl_;
    std::vector<SupportLattice> sl_;
    std::vector<ResolutionStep> steps_;
};

// Singular cone of lowest multiplicity (ties: lowest index) is subdivided
// at the parallelepiped point minimizing the coefficient sum, ties broken
// towards the lexicographically largest coefficient vector.
inline ResolutionChain desingularize(const Fan& f, std::size_t max_steps = 1000) {
    ResolutionChain chain(f);
    for (;;) {
        const Fan& cur = chain.final_fan();
        std::optional<std::size_t> pick;
        Int best_mult = 0;
        for (std::size_t c = 0; c < cur.max_cones.size(); ++c) {
            Int m = multiplicity(cur, cur.max_cones[c]);
            if (m > 1 && (!pick || m < best_mult)) {
                pick = c;
                best_mult = m;
            }
        }
        if (!pick) break;
        if (chain.length() >= max_steps)
            fail("iteration cap exceeded after " + std::to_string(chain.length()) + " resolution steps");
        RaySet parent = cur.max_cones[*pick];
        std::optional<ParallelepipedPoint> best;
        Rat best_sum = 0;
        for (const auto& p : parallelepiped_points(cur.generators(parent), cur.rank)) {
            if (is_zero(p.point)) continue;
            Rat s = 0;
            for (const auto& c : p.coefficients) s += c;
            if (!best || s < best_sum || (s == best_sum && p.coefficients > best->coefficients)) {
                best = p;
                best_sum = s;
            }
        }
        IntVector v = best->point;
        const ResolutionStep& step = chain.push(parent, v);
        // subdivided cones have strictly smaller multiplicity than their parents
        for (const auto& c : step.upper.max_cones) {
            if (!std::binary_search(c.begin(), c.end(), step.new_index())) continue;
            Int m = multiplicity(step.upper, c);
            bool smaller = false;
            for (const auto& old : step.lower.max_cones) {
                RaySet rest;
                for (auto i : c)
                    if (i != step.new_index()) rest.push_back(i);
                if (std::includes(old.begin(), old.end(), rest.begin(), rest.end()) &&
                    cone_contains(step.lower.generators(old), step.lower.rank, to_rat(step.inserted_ray)))
                    if (m < multiplicity(step.lower, old)) smaller = true;
            }
            if (!smaller) fail("resolution step did not reduce multiplicity");
        }
    }
    return chain;
}

// Replays an explicit list of insertions on the simplicialized base.
struct StepSpec {
    IntVector inserted_ray;
    RaySet parent_cone;
    std::optional<RatVector> coefficients;
};

inline ResolutionChain replay_chain(const Fan& f, const std::vector<StepSpec>& specs) {
    ResolutionChain chain(f);
    for (const auto& s : specs) {
        const ResolutionStep& step = chain.push(s.parent_cone, s.inserted_ray);
        if (s.coefficients && *s.coefficients != step.coefficients)
            fail("chain coefficients do not match inserted ray " + format_vector(s.inserted_ray));
    }
    if (!is_smooth(chain.final_fan())) fail("chain does not end in a smooth fan");
    return chain;
}

// ---- T and T* ------------------------------------------------------------

inline IntVector pullback_step(const ResolutionStep& s, const IntVector& h) {
    Rat v = 0;
    for (std::size_t k = 0; k < s.parent_cone.size(); ++k) v += s.coefficients[k] * Rat(h[s.parent_cone[k]]);
    IntVector out = h;
    out.push_back(as_int(v));
    return out;
}

inline IntVector pullback_T(const ResolutionChain& chain, const IntVector& h) {
    if (h.size() != chain.base_fan().num_rays() || !chain.base_lattice().lattice.contains(h))
        fail("support function " + format_vector(h) + " is not in SF(base)");
    IntVector out = h;
    for (const auto& s : chain.steps()) out = pullback_step(s, out);
    return out;
}

inline RatVector pushforward_step(const ResolutionStep& s, const RatVector& x) {
    RatVector out(x.begin(), x.end() - 1);
    const Rat& top = x.back();
    for (std::size_t k = 0; k < s.parent_cone.size(); ++k) out[s.parent_cone[k]] += s.coefficients[k] * top;
    return out;
}

inline Label pushforward_Tstar(const ResolutionChain& chain, const RatVector& x) {
    RatVector cur = chain.final_lattice().canonicalize(x).coords;
    for (std::size_t k = chain.length(); k-- > 0;) cur = pushforward_step(chain.steps()[k], cur);
    return chain.base_lattice().canonicalize(cur);
}

// ---- fibers ----------------------------------------------------------------

struct Progression {
    Rat d0;
    Rat l;
    std::size_t m = 0;
};

struct StepFiber {
    std::vector<RatVector> elements;  // lifts on the upper fan, by increasing inserted degree
    std::vector<Rat> degrees;
    Rat step;                         // lattice step of the inserted degree
    std::optional<Progression> progression;
};

// Granularity N with SF* inside (1/N) Z^u.
inline Int dual_denominator(const SupportLattice& sl) { return sl.dual().denominator(); }

// Smallest t > 0 such that moving degree t onto the new ray stays in SF*.
inline Rat fiber_step_size(const ResolutionStep& s, const SupportLattice& upper) {
    Int n = dual_denominator(upper);
    Int l = 1;
    for (const auto& c : s.coefficients) l = lcm_int(l, boost::multiprecision::denominator(c));
    for (Int k = 1; k <= n * l; ++k) {
        Rat t(k, n);
        RatVector d(s.upper.num_rays());
        for (std::size_t j = 0; j < s.parent_cone.size(); ++j) d[s.parent_cone[j]] = -s.coefficients[j] * t;
        d.back() = t;
        if (upper.in_dual(d)) return t;
    }
    fail("no lattice step found for fiber");
}

inline StepFiber fiber_step(const ResolutionStep& s, const SupportLattice& upper, const RatVector& e) {
    StepFiber out;
    out.step = fiber_step_size(s, upper);
    std::optional<Rat> bound;
    for (std::size_t k = 0; k < s.parent_cone.size(); ++k) {
        if (s.coefficients[k] == 0) continue;
        Rat b = e[s.parent_cone[k]] / s.coefficients[k];
        if (!bound || b < *bound) bound = b;
    }
    Int n = dual_denominator(upper);
    for (Int k = 0; Rat(k, n) <= *bound; ++k) {
        Rat d(k, n);
        RatVector lift = e;
        for (std::size_t j = 0; j < s.parent_cone.size(); ++j) lift[s.parent_cone[j]] -= s.coefficients[j] * d;
        lift.push_back(d);
        if (std::any_of(lift.begin(), lift.end(), [](const Rat& x) { return x < 0; })) continue;
        if (!upper.in_dual(lift)) continue;
        out.elements.push_back(lift);
        out.degrees.push_back(d);
    }
    if (!out.degrees.empty()) {
        for (std::size_t j = 1; j < out.degrees.size(); ++j)
            if (out.degrees[j] - out.degrees[j - 1] != out.step) fail("fiber degrees are not an arithmetic progression");
        out.progression = Progression{out.degrees.front(), out.step, out.degrees.size() - 1};
    }
    return out;
}

// Nonnegative points of the simplicialized fan's SF* with the same pairing
// against SF(base) as d. Bounded by a support function positive on all rays.
inline std::vector<RatVector> triangulation_fiber(const ResolutionChain& chain, const RatVector& d,
                                                  const IntVector& positive) {
    const SupportLattice& base = chain.base_lattice();
    const SupportLattice& tri = chain.lattice(0);
    const std::size_t u = base.num_rays;
    Int n = dual_denominator(tri);
    RatVector target = base.pairings(d);
    Rat budget = dot(to_rat(positive), d);
    std::vector<RatVector> out;
    RatVector x(u);
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t i, Rat left) {
        if (i == u) {
            if (left == 0 && tri.in_dual(x) && base.pairings(x) == target) out.push_back(x);
            return;
        }
        for (Int k = 0; Rat(k, n) * Rat(positive[i]) <= left; ++k) {
            x[i] = Rat(k, n);
            rec(i + 1, left - x[i] * Rat(positive[i]));
        }
        x[i] = 0;
    };
    rec(0, budget);
    std::sort(out.begin(), out.end());
    return out;
}

// A support function in the lattice with strictly positive value on every
// given vector, searched over small integer combinations of the basis.
inline std::optional<IntVector> find_positive_functional(const SupportLattice& sl, const std::vector<RatVector>& vecs,
                                                         long max_cap = 4) {
    const std::size_t s = sl.rank();
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < s; ++i) rows.push_back(sl.basis().row(i));
    for (long cap = 1; cap <= max_cap; ++cap) {
        std::vector<long> values{1, 0, -1};
        for (long v = 2; v <= cap; ++v) {
            values.push_back(v);
            values.push_back(-v);
        }
        std::vector<std::size_t> pick(s, 0);
        for (;;) {
            bool uses_cap = cap == 1;
            IntVector k(sl.num_rays);
            for (std::size_t i = 0; i < s; ++i) {
                long c = values[pick[i]];
                if (c == cap || c == -cap) uses_cap = true;
                for (std::size_t j = 0; j < sl.num_rays; ++j) k[j] += c * rows[i][j];
            }
            if (uses_cap) {
                bool ok = true;
                for (const auto& v : vecs)
                    if (dot(to_rat(k), v) <= 0) {
                        ok = false;
                        break;
                    }
                if (ok) return k;
            }
            std::size_t i = s;
            while (i > 0 && pick[i - 1] + 1 == values.size()) pick[--i] = 0;
            if (i == 0) break;
            ++pick[i - 1];
        }
    }
    return std::nullopt;
}

struct Fiber {
    std::vector<Label> elements;                // on the final fan
    std::optional<Progression> progression;     // for single-step chains
};

inline Fiber fiber_unchecked(const ResolutionChain& chain, const Label& d) {
    std::vector<RatVector> level;
    if (chain.base_is_simplicial()) {
        level.push_back(chain.base_lattice().canonicalize(d.coords).coords);
    } else {
        std::vector<RatVector> rays;
        for (std::size_t i = 0; i < chain.base_fan().num_rays(); ++i) rays.push_back(chain.base_lattice().ray_label(i).coords);
        std::vector<RatVector> units;
        for (std::size_t i = 0; i < chain.base_fan().num_rays(); ++i) {
            RatVector e(chain.base_fan().num_rays());
            e[i] = 1;
            units.push_back(e);
        }
        auto pos = find_positive_functional(chain.base_lattice(), units);
        if (!pos) fail("no positive support function bounds the fiber");
        level = triangulation_fiber(chain, chain.base_lattice().canonicalize(d.coords).coords, *pos);
    }
    Fiber out;
    for (std::size_t k = 0; k < chain.length(); ++k) {
        std::vector<RatVector> next;
        for (const auto& x : level) {
            StepFiber sf = fiber_step(chain.steps()[k], chain.lattice(k + 1), x);
            if (chain.length() == 1) out.progression = sf.progression;
            next.insert(next.end(), sf.elements.begin(), sf.elements.end());
        }
        level = std::move(next);
    }
    for (const auto& x : level)
        if (std::all_of(x.begin(), x.end(), [](const Rat& c) { return c >= 0; })) out.elements.push_back({x});
    return out;
}

inline Fiber fiber(const ResolutionChain& chain, const Label& d) {
    if (!in_kernel(chain.base_fan(), d)) fail("divisor " + d.str() + " is not in ker iota*");
    return fiber_unchecked(chain, d);
}

}  // namespace toric
