#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "convexsg/io.hpp"

namespace convexsg {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// The full acceptance suite; every tolerance and threshold is pinned in code.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

// Timing-free JSON summary of the randomized property suites. Identical
// seeds produce byte-identical dumps regardless of thread count; the trace
// field digests every individual outcome in order.
Json property_suite_report(std::uint64_t seed, int cases);

// Fixed cones used throughout the suites.
Polyhedron quadrant_cone();
Polyhedron wedge_cone();  // cone{(1,1),(1,-1)}

}  // namespace convexsg
