#pragma once

#include <string>
#include <utility>
#include <vector>

#include "convexsg/polyhedron.hpp"

namespace convexsg {

struct LabFact {
    std::string name;
    std::string relation;  // the claimed relation, human-readable
    bool verified = false;
    Rational value;        // the recomputed quantity
};

struct TruncationReport {
    std::string experiment;
    std::vector<int> indices;
    std::string note;
    std::vector<LabFact> facts;

    bool all_verified() const {
        for (const LabFact& f : facts)
            if (!f.verified) return false;
        return true;
    }
};

// Summands whose sum grows an e0 half-line only in the limit:
// A_N = conv{ n e0 + 2^n n e_n : 0 <= n <= N } and its mirror, in dim N+1.
// Valid for 1 <= N <= 12.
std::pair<Polyhedron, Polyhedron> build_halfline_pair(int n);

// Verifies the e0-reach 2N of the truncated sum, the 1/3 distance bound
// keeping e0 outside A_N, and the triviality of every finite recession cone.
// Requires N >= 2.
TruncationReport verify_halfline_emergence(int n);

// Summands whose sum loses closedness in the limit:
// A_N = conv{ e0/n + (2^n + 1) e_n : 1 <= n <= N } and its mirror, dim N+1.
// Valid for 2 <= N <= 12.
std::pair<Polyhedron, Polyhedron> build_nonclosed_pair(int n);

// d(N) = dist_inf(0, A_N + B_N) equals 2/N exactly; the origin stays outside
// every truncated sum while d(N) -> 0.
TruncationReport verify_nonclosedness_trend(const std::vector<int>& n_list);

// conv of the union of the cubes [n,2n]^n embedded in the first n
// coordinates, n = 1..N, inside dim N. Valid for 1 <= N <= 6.
Polyhedron build_growing_cube_hull(int n);

// Max of the all-ones functional is 2N*N; the hull is a polytope.
TruncationReport verify_growing_cubes(int n);

// LP recomputation of sup{ c.x : x in P } over the combination weights; kept
// separate from support_function so reported values never reuse the vertex
// maximum they are checked against.
std::optional<Rational> max_functional_lp(const Polyhedron& p, const Vec& c);

}  // namespace convexsg
