#pragma once

#include <vector>

#include "convexsg/lp.hpp"

namespace convexsg {

// Generator description of a polyhedral cone: span(lineality) + cone(rays).
// Rays are extreme modulo the lineality space.
struct ConeDescription {
    Mat lineality;
    Mat rays;
};

// Double description: extreme rays and lineality of { y : row . y <= 0 }.
// Rows are processed incrementally; at most 256 rows are supported.
ConeDescription dd_cone_from_inequalities(const Mat& rows, int dim);

// Minimal inequality description of conv(vertices) + cone(rays). Equality
// rows appear when the set is not full-dimensional. Restricted to dim <= 8
// and at most 32 generators. Output is sorted and primitive-integer scaled.
std::vector<LinearConstraint> vrep_to_hrep(const Mat& vertices, const Mat& rays, int dim);

struct VrepResult {
    bool empty = false;
    Mat vertices;
    Mat rays;  // one-sided rays plus both members of each lineality pair
};

// Generators of { x : constraints }, not yet canonicalized. Empty feasible
// sets are reported via the flag.
VrepResult hrep_to_vrep(const std::vector<LinearConstraint>& constraints, int dim);

}  // namespace convexsg
