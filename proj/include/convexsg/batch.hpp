#pragma once

#include <cstdint>
#include <vector>

#include "convexsg/polyhedron.hpp"

namespace convexsg {

// Data-parallel verification kernels. Every kernel ships in two variants: an
// OpenMP parallel one and a serial reference kept for testing; outputs are
// indexed by input position, so results do not depend on the thread count.

// Rational grid covering [lo, hi] with the given step, row-major.
Mat grid_points(const Vec& lo, const Vec& hi, const Rational& step);

std::vector<std::uint8_t> contains_many(const Polyhedron& p, const Mat& points);
std::vector<std::uint8_t> contains_many_serial(const Polyhedron& p, const Mat& points);

// Brute-force erosion verdicts: for each x, whether x + B is a subset of A.
// Decided with membership programs only; independent of the facet-shifting
// erosion path it is used to check.
std::vector<std::uint8_t> erosion_oracle(const Polyhedron& a, const Polyhedron& b,
                                         const Mat& points);
std::vector<std::uint8_t> erosion_oracle_serial(const Polyhedron& a, const Polyhedron& b,
                                                const Mat& points);

}  // namespace convexsg
