#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "toric/io.hpp"
#include "toric/monoid.hpp"
#include "toric/qspace.hpp"
#include "toric/stability.hpp"

using namespace toric;
using io::json;

namespace {

json int_json(const Int& x) {
    if (x >= Int(std::numeric_limits<long long>::min()) && x <= Int(std::numeric_limits<long long>::max()))
        return static_cast<long long>(x);
    return x.str();
}

// key = value lines, sorted by key; --json prints the same map.
class Output {
public:
    void put(const std::string& key, const std::string& text, json value) {
        entries_[key] = {text, std::move(value)};
    }
    void put(const std::string& key, const std::string& s) { put(key, s, s); }
    void put(const std::string& key, const char* s) { put(key, std::string(s)); }
    void put(const std::string& key, bool b) { put(key, b ? "true" : "false", b); }
    void put(const std::string& key, const Int& x) { put(key, x.str(), int_json(x)); }
    void put(const std::string& key, std::size_t x) { put(key, Int(x)); }
    void put(const std::string& key, const Rat& x) { put(key, x.str(), x.str()); }
    void put(const std::string& key, const Label& l) { put(key, l.str(), io::rat_strings(l.coords)); }
    void put(const std::string& key, const IntVector& v) { put(key, format_vector(v), io::int_array(v)); }

    void print(bool as_json) const {
        if (as_json) {
            json j = json::object();
            for (const auto& [k, v] : entries_) j[k] = v.second;
            std::cout << j.dump(2) << "\n";
            return;
        }
        for (const auto& [k, v] : entries_) std::cout << k << " = " << v.first << "\n";
    }

private:
    std::map<std::string, std::pair<std::string, json>> entries_;
};

std::string idx(const std::string& name, std::size_t k, std::size_t n) {
    std::string s = std::to_string(k);
    std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
    return name + "[" + std::string(width - std::min(width, s.size()), '0') + s + "]";
}

std::string group_text(const AbelianGroup& g) { return g.str(); }

json group_json(const AbelianGroup& g) {
    json t = json::array();
    for (const auto& x : g.torsion) t.push_back(int_json(x));
    return {{"free_rank", g.free_rank}, {"torsion", t}};
}

void put_fan_summary(Output& out, const std::string& prefix, const Fan& f) {
    out.put(prefix + "rank", f.rank);
    for (std::size_t i = 0; i < f.num_rays(); ++i) out.put(idx(prefix + "ray", i, f.num_rays()), f.rays[i]);
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        json a = json::array();
        for (auto i : f.max_cones[c]) a.push_back(i);
        out.put(idx(prefix + "cone", c, f.max_cones.size()), format_set(f.max_cones[c]), a);
    }
}

ResolutionChain load_chain(const Fan& f, const std::string& chain_path) {
    if (chain_path.empty()) return desingularize(f);
    return replay_chain(f, io::steps_from_json(io::read_json(chain_path)));
}

Semantics pick_semantics(const Fan& f, const std::string& s) {
    return s.empty() ? default_semantics(f) : parse_semantics(s);
}

PartialMonoid load_monoid(const Fan& f, const std::string& sem, const std::string& chain_path) {
    Semantics s = pick_semantics(f, sem);
    if (s == Semantics::resolution) return PartialMonoid(f, s, load_chain(f, chain_path));
    return PartialMonoid(f, s);
}

void put_steps(Output& out, const ResolutionChain& ch) {
    const std::size_t n = ch.length();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& s = ch.steps()[k];
        json pc = json::array();
        for (auto i : s.parent_cone) pc.push_back(i);
        out.put(idx("step", k, n) + ".inserted_ray", s.inserted_ray);
        out.put(idx("step", k, n) + ".parent_cone", format_set(s.parent_cone), pc);
        out.put(idx("step", k, n) + ".coefficients", format_vector(s.coefficients), io::rat_strings(s.coefficients));
        out.put(idx("step", k, n) + ".multiplicity", multiplicity(s.lower, s.parent_cone));
    }
}

std::vector<IntVector> read_int_vectors(const std::string& path, const std::string& what) {
    return io::int_vectors(io::read_json(path), what);
}

struct Options {
    bool json = false;
    std::string fan, divisor, chain, emit_chain, semantics, function, map, config, exponents, relations, generators;
    std::string catalog_name;
    std::vector<long> catalog_params;
    bool oracle = false, certificate = false;
    std::size_t max_vertices = 0;
};

int run(int argc, char** argv) {
    CLI::App app{"toric: fans, support lattices, label monoids and map spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "print the result as one JSON document");

    std::function<void(Output&)> action;
    bool raw = false;  // the catalog verb prints a fan file, not key = value lines
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<void(Output&)> f) {
        CLI::App* c = parent->add_subcommand(name, help);
        c->callback([&action, f] { action = f; });
        return c;
    };
    auto fan_arg = [&](CLI::App* c) { c->add_option("fan", o.fan, "fan file, - for stdin")->required(); };
    auto divisor_opt = [&](CLI::App* c, bool required) {
        auto* opt = c->add_option("--divisor", o.divisor, "label file: list of rationals or {\"coords\": [...]}");
        if (required) opt->required();
    };
    auto chain_opt = [&](CLI::App* c) { c->add_option("--chain", o.chain, "resolution chain file to replay"); };
    auto sem_opt = [&](CLI::App* c) {
        c->add_option("--semantics", o.semantics, "cone or resolution (default: cone on smooth fans)");
    };
    auto divisor = [&]() { return Label{io::read_label(o.divisor)}; };

    // ---- catalog
    {
        CLI::App* c = leaf(&app, "catalog", "print a catalog fan", [&](Output&) {
            raw = true;
            std::cout << io::fan_to_json(catalog(o.catalog_name, o.catalog_params)).dump(2) << "\n";
        });
        c->add_option("name", o.catalog_name, "projective | hirzebruch | weighted | quadric | tetrahedral")->required();
        c->add_option("params", o.catalog_params, "integer parameters");
    }

    // ---- fan
    CLI::App* fan = app.add_subcommand("fan", "fan validation and resolution");
    fan->require_subcommand(1);
    {
        auto* c = leaf(fan, "validate", "check that the file describes a fan", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            FanReport r = validate(f);
            out.put("valid", true);
            out.put("simplicial", r.is_simplicial);
            out.put("smooth", r.is_smooth);
            out.put("complete", r.is_complete);
        });
        fan_arg(c);
    }
    {
        auto* c = leaf(fan, "info", "combinatorial summary of a fan", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            FanReport r = validate(f);
            put_fan_summary(out, "", f);
            if (!f.name.empty()) out.put("name", f.name);
            if (f.lattice_note) out.put("lattice", *f.lattice_note);
            out.put("simplicial", r.is_simplicial);
            out.put("smooth", r.is_smooth);
            out.put("complete", r.is_complete);
            Int mx = 0;
            for (std::size_t k = 0; k < r.multiplicities.size(); ++k) {
                const Int& m = r.multiplicities[k];
                if (m == 0) out.put(idx("multiplicity", k, r.multiplicities.size()), "non-simplicial", nullptr);
                else out.put(idx("multiplicity", k, r.multiplicities.size()), m);
                if (m > mx) mx = m;
            }
            if (r.is_simplicial) out.put("multiplicity(max)", mx);
            auto mn = minimal_nonfaces(f);
            for (std::size_t k = 0; k < mn.size(); ++k) {
                json a = json::array();
                for (auto i : mn[k]) a.push_back(i);
                out.put(idx("minimal_nonface", k, mn.size()), format_set(mn[k]), a);
            }
        });
        fan_arg(c);
    }
    {
        auto* c = leaf(fan, "resolve", "desingularize by ray insertions", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            ResolutionChain ch = load_chain(f, o.chain);
            out.put("length", ch.length());
            out.put("base_simplicial", ch.base_is_simplicial());
            put_steps(out, ch);
            put_fan_summary(out, "final.", ch.final_fan());
            out.put("final.smooth", is_smooth(ch.final_fan()));
            if (!o.emit_chain.empty()) {
                std::ofstream os(o.emit_chain);
                if (!os) fail_usage("cannot write '" + o.emit_chain + "'");
                os << io::chain_to_json(ch).dump(2) << "\n";
            }
        });
        fan_arg(c);
        chain_opt(c);
        c->add_option("--emit-chain", o.emit_chain, "write the chain as JSON");
    }
    {
        auto* c = leaf(fan, "fiber", "divisors on the resolved fan pushing forward to D", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            ResolutionChain ch = load_chain(f, o.chain);
            Fiber fb = fiber(ch, divisor());
            out.put("size", fb.elements.size());
            for (std::size_t k = 0; k < fb.elements.size(); ++k)
                out.put(idx("element", k, fb.elements.size()), fb.elements[k]);
            if (fb.progression) {
                out.put("progression.start", fb.progression->d0);
                out.put("progression.step", fb.progression->l);
                out.put("progression.last", fb.progression->m);
            }
        });
        fan_arg(c);
        divisor_opt(c, true);
        chain_opt(c);
    }
    {
        auto* c = leaf(fan, "pullback", "T: support function on the base to the resolved fan", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            ResolutionChain ch = load_chain(f, o.chain);
            IntVector h = io::int_vector(io::read_json(o.function), "support function");
            out.put("pullback", pullback_T(ch, h));
        });
        fan_arg(c);
        c->add_option("--function", o.function, "support function values on the rays (JSON list)")->required();
        chain_opt(c);
    }
    {
        auto* c = leaf(fan, "pushforward", "T*: label on the resolved fan to the base", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            ResolutionChain ch = load_chain(f, o.chain);
            out.put("pushforward", pushforward_Tstar(ch, io::read_label(o.divisor)));
        });
        fan_arg(c);
        divisor_opt(c, true);
        chain_opt(c);
    }

    // ---- divisors
    CLI::App* div = app.add_subcommand("divisors", "support functions and divisor groups");
    div->require_subcommand(1);
    {
        auto* c = leaf(div, "sf", "basis of SF as ray values", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            SupportLattice sl = support_lattice(f);
            out.put("rank", sl.rank());
            for (std::size_t i = 0; i < sl.rank(); ++i) out.put(idx("basis", i, sl.rank()), sl.basis().row(i));
            auto w = sl.dual_basis();
            for (std::size_t i = 0; i < w.size(); ++i) out.put(idx("dual_basis", i, w.size()), w[i]);
        });
        fan_arg(c);
    }
    {
        auto* c = leaf(div, "pic", "Picard group", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            AbelianGroup g = picard(f);
            out.put("picard", group_text(g), group_json(g));
            out.put("h2_free_rank", g.free_rank);
        });
        fan_arg(c);
    }
    {
        auto* c = leaf(div, "pi2", "pi_2 of the variety inside SF*", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            CurveLattice cl = pi2_lattice(f);
            out.put("rank", cl.basis.size());
            out.put("exact_pi2", cl.is_pi2);
            for (std::size_t i = 0; i < cl.basis.size(); ++i) out.put(idx("generator", i, cl.basis.size()), cl.basis[i]);
        });
        fan_arg(c);
    }
    {
        auto* c = leaf(div, "pi1x", "fundamental group of the variety", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            AbelianGroup g = pi1_variety(f);
            out.put("pi1", group_text(g), group_json(g));
        });
        fan_arg(c);
    }
    {
        auto* c = leaf(div, "iota", "rows of iota* (one per ray)", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            IntMatrix m = iota_star(f);
            for (std::size_t i = 0; i < m.rows(); ++i) out.put(idx("row", i, m.rows()), m.row(i));
        });
        fan_arg(c);
    }
    {
        auto* c = leaf(div, "canon", "canonical form of a label in SF*", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            SupportLattice sl = support_lattice(f);
            DivisorClass d = divisor_class(f, sl, io::read_label(o.divisor));
            out.put("canonical", d.label);
            out.put("in_kernel", d.in_kernel);
            out.put("dual_coordinates", sl.dual_coordinates(d.label));
        });
        fan_arg(c);
        divisor_opt(c, true);
    }

    // ---- labels
    CLI::App* lab = app.add_subcommand("labels", "the partial monoid of labels");
    lab->require_subcommand(1);
    {
        auto* c = leaf(lab, "simples", "simple labels", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            PartialMonoid pm = load_monoid(f, o.semantics, o.chain);
            const auto& s = pm.simples();
            out.put("semantics", to_string(pm.semantics()));
            out.put("count", s.size());
            for (std::size_t i = 0; i < s.size(); ++i) out.put(idx("simple", i, s.size()), s[i]);
        });
        fan_arg(c);
        sem_opt(c);
        chain_opt(c);
    }
    {
        auto* c = leaf(lab, "check", "validity of one label", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            PartialMonoid pm = load_monoid(f, o.semantics, o.chain);
            Label l = pm.canonical(io::read_label(o.divisor));
            out.put("semantics", to_string(pm.semantics()));
            out.put("canonical", l);
            auto w = pm.witness(l);
            out.put("valid", w.has_value());
            if (w && !l.is_zero()) {
                const Fan& wf = pm.semantics() == Semantics::cone ? pm.fan() : pm.chain()->final_fan();
                json a = json::array();
                for (auto i : wf.max_cones[w->cone]) a.push_back(i);
                out.put("witness.cone", format_set(wf.max_cones[w->cone]), a);
                out.put("witness.coefficients", format_vector(w->coefficients), io::rat_strings(w->coefficients));
            }
        });
        fan_arg(c);
        divisor_opt(c, true);
        sem_opt(c);
        chain_opt(c);
    }
    {
        auto* c = leaf(lab, "grading", "a positive grading of the valid labels", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            PartialMonoid pm = load_monoid(f, o.semantics, o.chain);
            out.put("semantics", to_string(pm.semantics()));
            out.put("grading", pm.grading());
        });
        fan_arg(c);
        sem_opt(c);
        chain_opt(c);
    }
    {
        auto* c = leaf(lab, "hilbert", "generators of each cell of valid labels", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            PartialMonoid pm = load_monoid(f, o.semantics, o.chain);
            out.put("semantics", to_string(pm.semantics()));
            const auto& cells = pm.cells();
            out.put("cells", cells.size());
            for (std::size_t k = 0; k < cells.size(); ++k)
                for (std::size_t i = 0; i < cells[k].size(); ++i)
                    out.put(idx("cell", k, cells.size()) + idx(".generator", i, cells[k].size()), cells[k][i]);
        });
        fan_arg(c);
        sem_opt(c);
        chain_opt(c);
    }

    // ---- configuration space
    CLI::App* q = app.add_subcommand("q", "components and loops of the configuration space");
    q->require_subcommand(1);
    {
        auto* c = leaf(q, "pi0", "connected components for total label D", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            PartialMonoid pm = load_monoid(f, o.semantics, o.chain);
            Label d = divisor();
            out.put("semantics", to_string(pm.semantics()));
            if (o.oracle && o.certificate) fail_usage("--oracle and --certificate are exclusive");
            if (o.certificate) {
                auto cert = pi0_certificate(pm, d);
                out.put("certificate", cert.has_value());
                if (cert) {
                    out.put("components", std::size_t{1});
                    for (std::size_t i = 0; i < cert->size(); ++i) out.put(idx("basis", i, cert->size()), (*cert)[i]);
                }
                return;
            }
            std::size_t cap = o.max_vertices ? o.max_vertices : default_vertex_cap();
            Pi0Result r = pi0_oracle(pm, d, cap);
            out.put("components", r.components);
            out.put("vertices", r.vertices);
            for (std::size_t k = 0; k < r.representatives.size(); ++k) {
                const auto& rep = r.representatives[k];
                std::string text;
                json a = json::array();
                for (const auto& l : rep) {
                    text += (text.empty() ? "" : " + ") + l.str();
                    a.push_back(io::rat_strings(l.coords));
                }
                out.put(idx("representative", k, r.representatives.size()), text.empty() ? "empty" : text, a);
            }
        });
        fan_arg(c);
        divisor_opt(c, true);
        sem_opt(c);
        chain_opt(c);
        c->add_flag("--oracle", o.oracle, "exhaustive search (default)");
        c->add_flag("--certificate", o.certificate, "look for a connectivity certificate");
        c->add_option("--max-vertices", o.max_vertices, "vertex cap for the search (env TORIC_MAX_VERTICES)");
    }
    {
        auto* c = leaf(q, "pi1", "generators of pi_1 from colliding simples", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            PartialMonoid pm = load_monoid(f, o.semantics, o.chain);
            Pi1Presentation p = pi1_presentation(pm);
            out.put("semantics", to_string(pm.semantics()));
            out.put("order_bound", p.order_bound);
            out.put("generators", p.generators.size());
            for (const auto& g : p.generators) {
                std::string key = "generator (" + std::to_string(g.i) + "," + std::to_string(g.j) + ") order";
                if (g.order) out.put(key, *g.order);
                else out.put(key, "inf");
            }
            const auto& s = pm.simples();
            for (std::size_t i = 0; i < s.size(); ++i) out.put(idx("simple", i, s.size()), s[i]);
        });
        fan_arg(c);
        sem_opt(c);
        chain_opt(c);
    }

    // ---- stability
    {
        auto* c = leaf(&app, "stability", "stability dimension n(D)", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            ResolutionChain ch = load_chain(f, o.chain);
            StabilityResult r = stability(ch, divisor());
            out.put("n(D)", r.n);
            out.put("method", r.method);
            out.put("active", r.active);
            if (r.degree) out.put("witness.degree", *r.degree);
            if (r.j) out.put("witness.j", *r.j);
        });
        fan_arg(c);
        divisor_opt(c, true);
        chain_opt(c);
    }

    // ---- maps
    CLI::App* mp = app.add_subcommand("map", "holomorphic maps as polynomial tuples");
    mp->require_subcommand(1);
    auto map_opt = [&](CLI::App* c) {
        c->add_option("--map", o.map, "map file {\"polys\": [...]}")->required();
    };
    auto put_map = [&](Output& out, const HolMap& m) {
        out.put("degree", m.degree);
        for (std::size_t i = 0; i < m.polys.size(); ++i)
            out.put(idx("p", i, m.polys.size()), m.polys[i].poly.str(), io::poly_to_json(m.polys[i].poly));
    };
    {
        auto* c = leaf(mp, "check", "monicity, condition (X) and degree", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            HolMap m = validate_map(f, io::polys_from_json(io::read_json(o.map)));
            out.put("valid", true);
            put_map(out, m);
        });
        fan_arg(c);
        map_opt(c);
    }
    {
        auto* c = leaf(mp, "scan", "labelled configuration of a factored map", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            HolMap m = validate_map(f, io::polys_from_json(io::read_json(o.map)));
            Configuration cf = config_from_map(m);
            out.put("degree", m.degree);
            out.put("points", cf.size());
            for (std::size_t k = 0; k < cf.size(); ++k) {
                out.put(idx("point", k, cf.size()) + ".z", cf[k].z.str());
                out.put(idx("point", k, cf.size()) + ".label", cf[k].label);
            }
        });
        fan_arg(c);
        map_opt(c);
    }
    {
        auto* c = leaf(mp, "build", "map of a labelled configuration", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            HolMap m = map_from_config(f, io::config_from_json(io::read_json(o.config)));
            put_map(out, m);
        });
        fan_arg(c);
        c->add_option("--config", o.config, "configuration file {\"points\": [{\"z\", \"label\"}]}")->required();
    }
    {
        auto* c = leaf(mp, "embed", "monomial embedding and its relations", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            HolMap m = validate_map(f, io::polys_from_json(io::read_json(o.map)));
            Embedding e = monomial_data(f, read_int_vectors(o.exponents, "exponents"));
            PolyTuple z = embed(e, m);
            for (std::size_t i = 0; i < z.size(); ++i) out.put(idx("z", i, z.size()), z[i].str(), io::poly_to_json(z[i]));
            if (!o.relations.empty()) {
                auto rels = io::relations_from_json(io::read_json(o.relations));
                auto bad = check_relations(z, rels);
                out.put("relations", rels.size());
                out.put("relations_hold", !bad.has_value());
                if (bad) {
                    out.put("failure.relation", bad->relation);
                    out.put("failure.coefficient", Int(bad->coefficient));
                    out.put("failure.left", bad->left.str());
                    out.put("failure.right", bad->right.str());
                }
            }
        });
        fan_arg(c);
        map_opt(c);
        c->add_option("--exponents", o.exponents, "exponents m_1..m_N (JSON list of vectors); m_0 = 0 is implied")
            ->required();
        c->add_option("--relations", o.relations, "relations file: list of [lhs, rhs] exponent vectors");
    }
    {
        auto* c = leaf(mp, "represent", "tuple of a map on the resolved fan over the singular base", [&](Output& out) {
            Fan f = io::read_fan(o.fan);
            ResolutionChain ch = load_chain(f, o.chain);
            HolMap m = validate_map(ch.final_fan(), io::polys_from_json(io::read_json(o.map)));
            auto taus = read_int_vectors(o.generators, "generators");
            SingularRepresentation r = singular_representation(ch, taus, m);
            out.put("base_degree", r.base_degree);
            for (std::size_t i = 0; i < r.q.size(); ++i) {
                out.put(idx("q", i, r.q.size()), r.q[i].str(), io::poly_to_json(r.q[i]));
                out.put(idx("exponents", i, r.q.size()), r.exponents[i]);
            }
            if (!o.relations.empty()) {
                auto rels = io::relations_from_json(io::read_json(o.relations));
                auto bad = check_relations(r.q, rels);
                out.put("relations", rels.size());
                out.put("relations_hold", !bad.has_value());
                if (bad) out.put("failure.relation", bad->relation);
            }
        });
        fan_arg(c);
        map_opt(c);
        chain_opt(c);
        c->add_option("--generators", o.generators, "support functions tau_i on the base (JSON list of vectors)")
            ->required();
        c->add_option("--relations", o.relations, "relations among the q_i");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!action) {
        std::cerr << "error: no command given\n";
        return 2;
    }
    Output out;
    action(out);
    if (!raw) out.print(o.json);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::usage: return 2;
            case ErrorKind::resource: return 3;
            default: return 1;
        }
    } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
