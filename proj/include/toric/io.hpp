#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "toric/fan.hpp"
#include "toric/maps.hpp"
#include "toric/resolve.hpp"

namespace toric::io {

using json = nlohmann::ordered_json;

// "-" reads standard input.
inline std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) fail_usage("cannot open file '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline json parse(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail_usage("malformed JSON in " + what + ": " + e.what());
    }
}

inline json read_json(const std::string& path) { return parse(read_text(path), path == "-" ? "stdin" : path); }

inline const json& field(const json& j, const char* key, const std::string& what) {
    if (!j.is_object()) fail_usage(what + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) fail_usage(what + " is missing \"" + key + "\"");
    return *it;
}

inline Int to_int_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        Rat r = parse_rat(j.get<std::string>());
        if (!is_integral(r)) fail_usage(what + " must be an integer");
        return as_int(r);
    }
    fail_usage(what + " must be an integer");
}

inline Rat to_rat_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    fail_usage(what + " must be a rational string \"p/q\" or an integer");
}

inline IntVector int_vector(const json& j, const std::string& what) {
    if (!j.is_array()) fail_usage(what + " must be a list of integers");
    IntVector v;
    for (const auto& x : j) v.push_back(to_int_json(x, what));
    return v;
}

inline RatVector rat_vector(const json& j, const std::string& what) {
    if (!j.is_array()) fail_usage(what + " must be a list of rationals");
    RatVector v;
    for (const auto& x : j) v.push_back(to_rat_json(x, what));
    return v;
}

inline std::vector<IntVector> int_vectors(const json& j, const std::string& what) {
    if (!j.is_array()) fail_usage(what + " must be a list of integer vectors");
    std::vector<IntVector> out;
    for (const auto& x : j) out.push_back(int_vector(x, what));
    return out;
}

inline json rat_strings(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

inline json int_array(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(static_cast<long long>(x));
    return a;
}

// ---- fans ----------------------------------------------------------------

inline Fan fan_from_json(const json& j) {
    const json& rank = field(j, "rank", "fan file");
    if (!rank.is_number_integer() || rank.get<long long>() < 1) fail_usage("fan \"rank\" must be a positive integer");
    std::size_t r = rank.get<std::size_t>();
    std::vector<IntVector> rays = int_vectors(field(j, "rays", "fan file"), "fan \"rays\"");
    const json& mc = field(j, "max_cones", "fan file");
    if (!mc.is_array()) fail_usage("fan \"max_cones\" must be a list of index lists");
    std::vector<RaySet> cones;
    for (const auto& c : mc) {
        if (!c.is_array()) fail_usage("fan \"max_cones\" must be a list of index lists");
        RaySet s;
        for (const auto& x : c) {
            if (!x.is_number_integer() || x.get<long long>() < 0) fail_usage("cone indices must be nonnegative integers");
            s.push_back(x.get<std::size_t>());
        }
        cones.push_back(s);
    }
    std::optional<IntMatrix> basis;
    if (j.contains("lattice_basis")) {
        auto rows = int_vectors(j["lattice_basis"], "fan \"lattice_basis\"");
        for (const auto& row : rows)
            if (row.size() != r) fail_usage("lattice_basis must be rank x rank");
        if (rows.size() != r) fail_usage("lattice_basis must be rank x rank");
        basis = IntMatrix::from_rows(rows, r);
    }
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) fail_usage("fan \"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    return make_fan(r, rays, cones, basis, name);
}

inline json fan_to_json(const Fan& f) {
    json j;
    j["rank"] = f.rank;
    json rays = json::array();
    for (const auto& v : f.rays) rays.push_back(int_array(v));
    j["rays"] = rays;
    json cones = json::array();
    for (const auto& c : f.max_cones) cones.push_back(c);
    j["max_cones"] = cones;
    if (!f.name.empty()) j["name"] = f.name;
    return j;
}

inline Fan read_fan(const std::string& path) { return fan_from_json(read_json(path)); }

// ---- labels ----------------------------------------------------------------

inline RatVector label_from_json(const json& j) {
    if (j.is_array()) return rat_vector(j, "label coordinates");
    return rat_vector(field(j, "coords", "label file"), "label \"coords\"");
}

inline json label_to_json(const Label& l) {
    json j;
    j["coords"] = rat_strings(l.coords);
    return j;
}

inline RatVector read_label(const std::string& path) { return label_from_json(read_json(path)); }

// ---- chains ----------------------------------------------------------------

inline json chain_to_json(const ResolutionChain& ch) {
    json a = json::array();
    for (const auto& s : ch.steps()) {
        json j;
        j["inserted_ray"] = int_array(s.inserted_ray);
        j["parent_cone"] = s.parent_cone;
        j["coefficients"] = rat_strings(s.coefficients);
        a.push_back(j);
    }
    return a;
}

inline std::vector<StepSpec> steps_from_json(const json& j) {
    if (!j.is_array()) fail_usage("chain file must be a list of steps");
    std::vector<StepSpec> out;
    for (const auto& s : j) {
        StepSpec st;
        st.inserted_ray = int_vector(field(s, "inserted_ray", "chain step"), "\"inserted_ray\"");
        const json& pc = field(s, "parent_cone", "chain step");
        if (!pc.is_array()) fail_usage("\"parent_cone\" must be a list of ray indices");
        for (const auto& x : pc) {
            if (!x.is_number_integer() || x.get<long long>() < 0) fail_usage("\"parent_cone\" must be a list of ray indices");
            st.parent_cone.push_back(x.get<std::size_t>());
        }
        if (s.contains("coefficients")) st.coefficients = rat_vector(s["coefficients"], "\"coefficients\"");
        out.push_back(st);
    }
    return out;
}

// ---- maps --------------------------------------------------------------------

inline std::vector<MapPoly> polys_from_json(const json& j) {
    const json& ps = field(j, "polys", "map file");
    if (!ps.is_array()) fail_usage("\"polys\" must be a list");
    std::vector<MapPoly> out;
    for (const auto& p : ps) {
        if (p.is_object() && p.contains("roots")) {
            Roots r;
            if (!p["roots"].is_array()) fail_usage("\"roots\" must be a list of [z, multiplicity] pairs");
            for (const auto& e : p["roots"]) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer() ||
                    e[1].get<long long>() < 0)
                    fail_usage("\"roots\" must be a list of [z, multiplicity] pairs");
                r.push_back({parse_gauss(e[0].get<std::string>()), e[1].get<std::size_t>()});
            }
            out.push_back(MapPoly::from_roots(r));
        } else if (p.is_object() && p.contains("coeffs")) {
            std::vector<Gauss> c;
            if (!p["coeffs"].is_array()) fail_usage("\"coeffs\" must be a list of numbers");
            for (const auto& x : p["coeffs"]) {
                if (x.is_number_integer()) c.push_back(Gauss(Rat(x.get<long long>())));
                else if (x.is_string()) c.push_back(parse_gauss(x.get<std::string>()));
                else fail_usage("\"coeffs\" must be a list of numbers");
            }
            out.push_back(MapPoly::from_coeffs(c));
        } else {
            fail_usage("each polynomial needs \"coeffs\" or \"roots\"");
        }
    }
    return out;
}

inline json poly_to_json(const Poly& p) {
    json c = json::array();
    for (const auto& x : p.coeffs()) c.push_back(x.str());
    json j;
    j["coeffs"] = c;
    return j;
}

inline Configuration config_from_json(const json& j) {
    const json& pts = field(j, "points", "configuration file");
    if (!pts.is_array()) fail_usage("\"points\" must be a list");
    Configuration c;
    for (const auto& p : pts) {
        const json& z = field(p, "z", "configuration point");
        if (!z.is_string() && !z.is_number_integer()) fail_usage("\"z\" must be a number string");
        Gauss g = z.is_string() ? parse_gauss(z.get<std::string>()) : Gauss(Rat(z.get<long long>()));
        c.push_back({g, {rat_vector(field(p, "label", "configuration point"), "\"label\"")}});
    }
    std::sort(c.begin(), c.end(), [](const ConfigPoint& a, const ConfigPoint& b) { return a.z < b.z; });
    return c;
}

inline json config_to_json(const Configuration& c) {
    json pts = json::array();
    for (const auto& p : c) {
        json j;
        j["z"] = p.z.str();
        j["label"] = rat_strings(p.label.coords);
        pts.push_back(j);
    }
    json j;
    j["points"] = pts;
    return j;
}

inline std::vector<Relation> relations_from_json(const json& j) {
    if (!j.is_array()) fail_usage("relations file must be a list of [lhs, rhs] exponent pairs");
    std::vector<Relation> out;
    for (const auto& r : j) {
        if (!r.is_array() || r.size() != 2) fail_usage("each relation must be a pair [lhs, rhs]");
        Relation rel;
        for (int side = 0; side < 2; ++side) {
            IntVector e = int_vector(r[side], "relation exponents");
            auto& dst = side == 0 ? rel.lhs : rel.rhs;
            for (const auto& x : e) {
                if (x < 0) fail_usage("relation exponents must be nonnegative");
                dst.push_back(static_cast<std::size_t>(x));
            }
        }
        out.push_back(rel);
    }
    return out;
}

}  // namespace toric::io
