#pragma once

#include <json.hpp>

#include <string>

#include "convexsg/instances.hpp"
#include "convexsg/lab.hpp"
#include "convexsg/mrh.hpp"
#include "convexsg/polyhedron.hpp"

namespace convexsg {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

// SetDescriptor: {"dim": n, "vertices": [["p/q", ...], ...], "rays": [...]}.
// Rationals are exact strings, never floats.
Json poly_to_json(const Polyhedron& p);
Polyhedron poly_from_json(const Json& j);
Polyhedron load_polyhedron(const std::string& path);

Json gap_to_json(const GapValue& g);
Json constraint_to_json(const LinearConstraint& c);
Json axiom_report_to_json(const AxiomReport& r);
Json truncation_report_to_json(const TruncationReport& r);
Json powers_report_to_json(const PowersReport& r);
Json mrh_class_to_json(const MrhClass& x);

Vec parse_rational_csv(const std::string& text, int expect_dim);

// FNV-1a 64 over raw bytes, hex-encoded; the inputs digest of run reports.
std::string fnv1a_hex(const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace convexsg
