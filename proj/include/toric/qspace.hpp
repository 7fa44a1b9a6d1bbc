#pragma once

#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric/monoid.hpp"

namespace toric {

using Decomposition = std::vector<Label>;  // sorted multiset of nonzero valid labels

inline std::size_t default_vertex_cap() {
    if (const char* env = std::getenv("TORIC_MAX_VERTICES")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == 0 && v > 0) return v;
    }
    return 200000;
}

// All ways of writing d as a sum of simples, as multiplicity vectors on
// pm.simples(), in lexicographic order.
inline std::vector<std::vector<std::size_t>> simple_decompositions(const PartialMonoid& pm, const Label& d) {
    const auto& s = pm.simples();
    Label target = pm.canonical(d.coords);
    std::vector<Rat> g;
    for (const auto& x : s) g.push_back(pm.grade(x));
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> n(s.size(), 0);
    std::function<void(std::size_t, const Label&)> rec = [&](std::size_t i, const Label& left) {
        Rat gl = pm.grade(left);
        if (gl < 0) return;
        if (i == s.size()) {
            if (left.is_zero()) out.push_back(n);
            return;
        }
        Label cur = left;
        for (std::size_t k = 0; pm.grade(cur) >= 0; ++k) {
            n[i] = k;
            rec(i + 1, cur);
            cur = cur - s[i];
        }
        n[i] = 0;
    };
    rec(0, target);
    std::sort(out.begin(), out.end());
    return out;
}

struct Pi0Result {
    std::size_t components = 0;
    std::vector<Decomposition> representatives;
    std::size_t vertices = 0;
};

// Graph on decompositions of d; edges merge two parts whose sum is valid (or
// split one part, the same edge read backwards). Each component contains a
// decomposition into simples, so a search from every such decomposition
// sees the whole graph.
inline Pi0Result pi0_oracle(const PartialMonoid& pm, const Label& d, std::size_t max_vertices = default_vertex_cap()) {
    Label target = pm.canonical(d.coords);
    const auto& simples = pm.simples();
    Pi0Result res;
    if (target.is_zero()) {
        res.components = 1;
        res.representatives.push_back({});
        res.vertices = 1;
        return res;
    }
    // label table: ids are assigned on first sight
    std::map<Label, std::size_t> ids;
    std::vector<Label> labels;
    auto id_of = [&](const Label& l) {
        auto [it, fresh] = ids.emplace(l, labels.size());
        if (fresh) labels.push_back(l);
        return it->second;
    };
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> split_cache;
    auto splits = [&](std::size_t p) -> const std::vector<std::pair<std::size_t, std::size_t>>& {
        auto it = split_cache.find(p);
        if (it != split_cache.end()) return it->second;
        std::vector<std::pair<std::size_t, std::size_t>> out;
        Label whole = labels[p];
        Rat gp = pm.grade(whole);
        for (const auto& a : pm.valid_labels(gp)) {
            Label b = pm.canonical((whole - a).coords);
            if (pm.grade(a) >= gp || b < a) continue;
            if (pm.is_valid(b)) out.emplace_back(id_of(a), id_of(b));
        }
        return split_cache.emplace(p, out).first->second;
    };
    using Vertex = std::vector<std::size_t>;  // sorted label ids
    std::set<Vertex> seen;
    auto label_order = [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; };
    auto normalize = [&](Vertex v) {
        std::sort(v.begin(), v.end(), label_order);
        return v;
    };
    std::vector<std::size_t> simple_ids;
    for (const auto& s : simples) simple_ids.push_back(id_of(s));

    for (const auto& n : simple_decompositions(pm, target)) {
        Vertex start;
        for (std::size_t i = 0; i < n.size(); ++i)
            for (std::size_t k = 0; k < n[i]; ++k) start.push_back(simple_ids[i]);
        start = normalize(start);
        if (seen.count(start)) continue;
        ++res.components;
        Decomposition rep;
        for (auto i : start) rep.push_back(labels[i]);
        res.representatives.push_back(rep);
        std::deque<Vertex> queue{start};
        seen.insert(start);
        auto visit = [&](Vertex v) {
            v = normalize(std::move(v));
            if (seen.insert(v).second) {
                if (seen.size() > max_vertices)
                    fail_resource("vertex cap of " + std::to_string(max_vertices) + " exceeded in pi0 oracle");
                queue.push_back(std::move(v));
            }
        };
        while (!queue.empty()) {
            Vertex v = std::move(queue.front());
            queue.pop_front();
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i > 0 && v[i] == v[i - 1]) continue;
                for (std::size_t j = i + 1; j < v.size(); ++j) {
                    if (j > i + 1 && v[j] == v[j - 1]) continue;
                    Label sum = labels[v[i]] + labels[v[j]];
                    if (!pm.is_valid(sum)) continue;
                    Vertex w;
                    for (std::size_t k = 0; k < v.size(); ++k)
                        if (k != i && k != j) w.push_back(v[k]);
                    w.push_back(id_of(pm.canonical(sum.coords)));
                    visit(std::move(w));
                }
                for (const auto& [a, b] : splits(v[i])) {
                    Vertex w;
                    for (std::size_t k = 0; k < v.size(); ++k)
                        if (k != i) w.push_back(v[k]);
                    w.push_back(a);
                    w.push_back(b);
                    visit(std::move(w));
                }
            }
        }
    }
    res.vertices = seen.size();
    return res;
}

// Labels m_1..m_r, independent, with d a nonnegative integer combination of
// them and every other simple merging into some m_i with a sum that stays in
// their nonnegative integer span. Searched over rank-sized sets of simples.
inline std::optional<std::vector<Label>> pi0_certificate(const PartialMonoid& pm, const Label& d) {
    Label target = pm.canonical(d.coords);
    const auto& s = pm.simples();
    const std::size_t r = pm.lattice().rank();
    const SupportLattice& sl = pm.lattice();
    std::optional<std::vector<Label>> found;
    // nonnegative integer coordinates of x on the set, if any
    auto coords_on = [&](const std::vector<Label>& m, const Label& x) -> std::optional<RatVector> {
        RatMatrix a(r, m.size());
        for (std::size_t j = 0; j < m.size(); ++j) {
            RatVector y = sl.pairings(m[j].coords);
            for (std::size_t i = 0; i < r; ++i) a(i, j) = y[i];
        }
        auto c = solve_rational(a, sl.pairings(x.coords));
        if (!c) return std::nullopt;
        for (const auto& v : *c)
            if (v < 0 || !is_integral(v)) return std::nullopt;
        return c;
    };
    for_each_subset(s.size(), std::min(r, s.size()), [&](const std::vector<std::size_t>& sub) {
        std::vector<Label> m;
        std::vector<IntVector> y;
        for (auto i : sub) {
            m.push_back(s[i]);
            y.push_back(sl.dual_coordinates(s[i]));
        }
        if (!independent(y, r)) return true;
        if (!coords_on(m, target)) return true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (std::find(sub.begin(), sub.end(), i) != sub.end()) continue;
            bool absorbed = false;
            for (const auto& mi : m) {
                Label sum = s[i] + mi;
                if (pm.is_valid(sum) && coords_on(m, sum)) {
                    absorbed = true;
                    break;
                }
            }
            if (!absorbed) return true;
        }
        found = m;
        return false;
    });
    return found;
}

struct Pi1Generator {
    std::size_t i = 0, j = 0;       // indices into simples()
    std::optional<Int> order;       // empty: infinite
};

struct Pi1Presentation {
    std::vector<Pi1Generator> generators;
    Int order_bound = 1;
};

// Product of the multiplicities of the maximal cones, taken on the
// simplicialized fan.
inline Int order_bound(const Fan& f) {
    Fan s = triangulate(f);
    Int p = 1;
    for (const auto& c : s.max_cones) p *= multiplicity(s, c);
    return p;
}

inline Pi1Presentation pi1_presentation(const PartialMonoid& pm) {
    Pi1Presentation out;
    out.order_bound = order_bound(pm.fan());
    const auto& s = pm.simples();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Label sum = s[i] + s[j];
            if (pm.is_valid(sum)) continue;
            Pi1Generator g{i, j, std::nullopt};
            for (Int n = 2; n <= out.order_bound; ++n)
                if (pm.is_valid(Rat(n) * sum)) {
                    g.order = n;
                    break;
                }
            out.generators.push_back(g);
        }
    return out;
}

}  // namespace toric
