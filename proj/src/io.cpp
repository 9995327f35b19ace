#include "convexsg/io.hpp"

#include <fstream>
#include <sstream>

namespace convexsg {
namespace {

Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const Rational& x : v) arr.push_back(x.str());
    return arr;
}

Vec vec_from_json(const Json& arr, const char* what) {
    if (!arr.is_array()) throw InputError(std::string(what) + " must be an array");
    Vec v;
    for (const Json& item : arr) {
        if (!item.is_string())
            throw InputError(std::string(what) + " coordinates must be rational strings");
        auto r = Rational::parse(item.get<std::string>());
        if (!r)
            throw InputError("cannot parse rational '" + item.get<std::string>() + "' in " + what);
        v.push_back(*r);
    }
    return v;
}

}  // namespace

Json poly_to_json(const Polyhedron& p) {
    Json j;
    j["dim"] = p.dim();
    Json verts = Json::array();
    for (const Vec& v : p.vertices()) verts.push_back(vec_to_json(v));
    j["vertices"] = verts;
    Json rays = Json::array();
    for (const Vec& r : p.rays()) rays.push_back(vec_to_json(r));
    j["rays"] = rays;
    return j;
}

Polyhedron poly_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("set descriptor must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw InputError("set descriptor needs an integer 'dim'");
    int dim = j["dim"].get<int>();
    if (!j.contains("vertices")) throw InputError("set descriptor needs 'vertices'");
    Mat verts, rays;
    for (const Json& v : j["vertices"]) verts.push_back(vec_from_json(v, "vertex"));
    if (j.contains("rays")) {
        for (const Json& r : j["rays"]) rays.push_back(vec_from_json(r, "ray"));
    }
    return Polyhedron::make(std::move(verts), std::move(rays), dim);
}

Polyhedron load_polyhedron(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open set file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw InputError("parse failure in " + path + " at byte " + std::to_string(e.byte) +
                         ": " + e.what());
    }
    return poly_from_json(j);
}

Json gap_to_json(const GapValue& g) { return g.finite ? Json(g.value.str()) : Json("inf"); }

Json constraint_to_json(const LinearConstraint& c) {
    Json j;
    j["coeffs"] = vec_to_json(c.coeffs);
    j["bound"] = c.bound.str();
    j["sense"] = c.sense == Sense::Equal ? "=" : "<=";
    return j;
}

Json axiom_report_to_json(const AxiomReport& r) {
    Json j;
    j["instance"] = r.instance;
    j["all_passed"] = r.all_passed();
    Json checks = Json::array();
    for (const AxiomCheck& c : r.checks) {
        Json cj;
        cj["axiom"] = c.axiom;
        cj["passed"] = c.passed;
        if (!c.passed) cj["witness"] = c.witness;
        checks.push_back(std::move(cj));
    }
    j["checks"] = checks;
    return j;
}

Json truncation_report_to_json(const TruncationReport& r) {
    Json j;
    j["experiment"] = r.experiment;
    j["indices"] = r.indices;
    if (!r.note.empty()) j["note"] = r.note;
    j["all_verified"] = r.all_verified();
    Json facts = Json::array();
    for (const LabFact& f : r.facts) {
        Json fj;
        fj["name"] = f.name;
        fj["relation"] = f.relation;
        fj["verified"] = f.verified;
        fj["value"] = f.value.str();
        facts.push_back(std::move(fj));
    }
    j["facts"] = facts;
    return j;
}

Json powers_report_to_json(const PowersReport& r) {
    Json j;
    j["schedule"] = r.schedule;
    Json gaps = Json::array();
    for (const Rational& g : r.gaps) gaps.push_back(g.str());
    j["gaps"] = gaps;
    j["converged"] = r.converged;
    return j;
}

Json mrh_class_to_json(const MrhClass& x) {
    Json j;
    j["cone"] = poly_to_json(x.cone);
    j["pos"] = poly_to_json(x.pos);
    j["neg"] = poly_to_json(x.neg);
    return j;
}

Vec parse_rational_csv(const std::string& text, int expect_dim) {
    Vec v;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto r = Rational::parse(part);
        if (!r) throw InputError("cannot parse rational '" + part + "'");
        v.push_back(*r);
    }
    if (expect_dim >= 0 && v.size() != static_cast<std::size_t>(expect_dim))
        throw InputError("expected " + std::to_string(expect_dim) + " coordinates");
    return v;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace convexsg
