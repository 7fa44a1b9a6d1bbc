#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric/divisors.hpp"
#include "toric/resolve.hpp"

namespace toric {

enum class Semantics { cone, resolution };

inline std::string to_string(Semantics s) { return s == Semantics::cone ? "cone" : "resolution"; }

inline Semantics parse_semantics(const std::string& s) {
    if (s == "cone") return Semantics::cone;
    if (s == "resolution") return Semantics::resolution;
    fail_usage("unknown semantics '" + s + "' (expected cone or resolution)");
}

// Valid labels form a union of "cells": each cell is the set of nonnegative
// integer combinations of a generator list. In cone mode the cells are the
// Hilbert bases of the maximal cones in SF*; in resolution mode they are the
// pushforwards of the unit labels of each cone of the resolved fan.
class PartialMonoid {
public:
    PartialMonoid(Fan f, Semantics s, std::optional<ResolutionChain> chain = std::nullopt)
        : fan_(std::move(f)), sem_(s) {
        sl_ = support_lattice(fan_);
        if (s == Semantics::resolution) {
            chain_ = chain ? std::move(*chain) : desingularize(fan_);
            if (!same_fan(chain_->base_fan(), fan_) || chain_->base_fan().rays != fan_.rays)
                fail("resolution chain does not start at this fan");
        }
    }

    const Fan& fan() const { return fan_; }
    const SupportLattice& lattice() const { return sl_; }
    Semantics semantics() const { return sem_; }
    const ResolutionChain* chain() const { return chain_ ? &*chain_ : nullptr; }

    Label canonical(const RatVector& x) const { return sl_.canonicalize(x); }

    bool is_valid(const Label& l) const { return is_valid_canonical(canonical(l.coords)); }

    // Coefficients of a witness: for cone mode, nonnegative rationals on the
    // rays of the returned cone; for resolution mode, nonnegative integers on
    // the rays of a cone of the resolved fan.
    struct Witness {
        std::size_t cone = 0;
        RatVector coefficients;
    };

    std::optional<Witness> witness(const Label& l) const {
        Label c = canonical(l.coords);
        if (c.is_zero()) return Witness{0, {}};
        return sem_ == Semantics::cone ? cone_witness(c) : resolution_witness(c);
    }

    const std::vector<std::vector<Label>>& cells() const {
        if (!cells_) cells_ = compute_cells();
        return *cells_;
    }

    // Union of the cell generators: the candidates for simple labels.
    const std::vector<Label>& candidates() const {
        if (!candidates_) {
            std::set<Label> s;
            for (const auto& c : cells())
                for (const auto& g : c) s.insert(g);
            candidates_ = std::vector<Label>(s.begin(), s.end());
        }
        return *candidates_;
    }

    const IntVector& grading() const {
        if (!grading_) {
            std::vector<RatVector> v;
            for (const auto& c : candidates()) v.push_back(c.coords);
            auto k = find_positive_functional(sl_, v, 5);
            if (!k) fail("no positive grading found");
            grading_ = *k;
        }
        return *grading_;
    }

    Rat grade(const Label& l) const { return dot(to_rat(grading()), l.coords); }

    // Every valid label with 0 < grade <= bound, sorted.
    std::vector<Label> valid_labels(const Rat& bound) const {
        std::set<Label> out;
        for (const auto& cell : cells()) {
            std::vector<Rat> g;
            for (const auto& x : cell) g.push_back(grade(x));
            Label acc{RatVector(sl_.num_rays)};
            std::function<void(std::size_t, Rat)> rec = [&](std::size_t i, Rat left) {
                if (i == cell.size()) {
                    if (!acc.is_zero()) out.insert(canonical(acc.coords));
                    return;
                }
                Label saved = acc;
                for (Rat used = 0; used <= left; used += g[i]) {
                    rec(i + 1, left - used);
                    acc = acc + cell[i];
                }
                acc = saved;
            };
            rec(0, bound);
        }
        return {out.begin(), out.end()};
    }

    const std::vector<Label>& simples() const {
        if (!simples_) {
            std::vector<Label> out;
            for (const auto& c : candidates())
                if (!decomposable(c)) out.push_back(c);
            simples_ = out;
        }
        return *simples_;
    }

    // a + b with a, b nonzero valid labels.
    bool decomposable(const Label& c) const {
        Rat gc = grade(c);
        for (const auto& a : valid_labels(gc)) {
            if (grade(a) >= gc) continue;
            if (is_valid_canonical(canonical((c - a).coords))) return true;
        }
        return false;
    }

private:
    bool is_valid_canonical(const Label& c) const {
        auto it = valid_cache_.find(c);
        if (it != valid_cache_.end()) return it->second;
        bool v = c.is_zero() || (sem_ == Semantics::cone ? cone_witness(c) : resolution_witness(c)).has_value();
        valid_cache_.emplace(c, v);
        return v;
    }

    std::optional<Witness> cone_witness(const Label& c) const {
        RatVector y = sl_.pairings(c.coords);
        for (std::size_t k = 0; k < fan_.max_cones.size(); ++k) {
            std::vector<IntVector> gens;
            for (auto i : fan_.max_cones[k]) gens.push_back(unit_pairings(i));
            auto coef = cone_coefficients(gens, sl_.rank(), y);
            if (coef) return Witness{k, *coef};
        }
        return std::nullopt;
    }

    std::optional<Witness> resolution_witness(const Label& c) const {
        const Fan& fin = chain_->final_fan();
        RatVector img = apply_iota_star(fan_, c.coords);
        const auto& push = pushed_units();
        for (std::size_t k = 0; k < fin.max_cones.size(); ++k) {
            const RaySet& tau = fin.max_cones[k];
            RatMatrix a(fin.rank, tau.size());
            for (std::size_t j = 0; j < tau.size(); ++j)
                for (std::size_t i = 0; i < fin.rank; ++i) a(i, j) = fin.rays[tau[j]][i];
            auto n = solve_rational(a, img);
            if (!n) continue;
            bool ok = true;
            for (const auto& x : *n)
                if (x < 0 || !is_integral(x)) ok = false;
            if (!ok) continue;
            Label sum{RatVector(sl_.num_rays)};
            for (std::size_t j = 0; j < tau.size(); ++j) sum = sum + (*n)[j] * push[tau[j]];
            if (sum == c) return Witness{k, *n};
        }
        return std::nullopt;
    }

    IntVector unit_pairings(std::size_t i) const {
        RatVector e(sl_.num_rays);
        e[i] = 1;
        return to_int(sl_.pairings(e));
    }

    // T*(e_i) for every ray of the resolved fan.
    const std::vector<Label>& pushed_units() const {
        if (!pushed_) {
            std::vector<Label> v;
            const Fan& fin = chain_->final_fan();
            for (std::size_t i = 0; i < fin.num_rays(); ++i) {
                RatVector e(fin.num_rays());
                e[i] = 1;
                v.push_back(pushforward_Tstar(*chain_, e));
            }
            pushed_ = v;
        }
        return *pushed_;
    }

    std::vector<std::vector<Label>> compute_cells() const {
        std::vector<std::vector<Label>> out;
        if (sem_ == Semantics::cone) {
            for (const auto& cone : fan_.max_cones) {
                std::vector<Label> gens;
                for (auto i : cone) gens.push_back(sl_.ray_label(i));
                out.push_back(hilbert_basis(gens, sl_));
            }
        } else {
            const Fan& fin = chain_->final_fan();
            for (const auto& tau : fin.max_cones) {
                std::vector<Label> gens;
                for (auto i : tau) gens.push_back(pushed_units()[i]);
                out.push_back(gens);
            }
        }
        return out;
    }

    Fan fan_;
    Semantics sem_;
    SupportLattice sl_;
    std::optional<ResolutionChain> chain_;
    mutable std::optional<std::vector<std::vector<Label>>> cells_;
    mutable std::optional<std::vector<Label>> candidates_;
    mutable std::optional<std::vector<Label>> simples_;
    mutable std::optional<IntVector> grading_;
    mutable std::optional<std::vector<Label>> pushed_;
    mutable std::map<Label, bool> valid_cache_;
};

inline Semantics default_semantics(const Fan& f) { return is_smooth(f) ? Semantics::cone : Semantics::resolution; }

}  // namespace toric
