#pragma once

#include "convexsg/polyhedron.hpp"

namespace convexsg {

// Element of the Minkowski-Radstrom-Hormander space over the cone V: an
// ordered pair (pos, neg) of polyhedra with recession cone V. Two classes
// with the same cone are equal iff pos1 + neg2 = neg1 + pos2; no canonical
// representative is computed.
struct MrhClass {
    Polyhedron cone;
    Polyhedron pos;
    Polyhedron neg;
};

// Membership in C_V, reduced to the polyhedral criterion recc(A) = V.
bool in_CV(const Polyhedron& a, const Polyhedron& v);

// The bounded witness for both inclusions of the C_V definition:
// conv({-p : p in A.vertices} union A.vertices union {0}).
Polyhedron cv_witness(const Polyhedron& a);

MrhClass mrh_make(const Polyhedron& a, const Polyhedron& b, const Polyhedron& v);
bool mrh_equivalent(const MrhClass& x, const MrhClass& y);
MrhClass mrh_add(const MrhClass& x, const MrhClass& y);
// lambda may be negative: negative scaling swaps the pair.
MrhClass mrh_scale(const Rational& lambda, const MrhClass& x);
// Canonical embedding j(A) = [A, V].
MrhClass embed_j(const Polyhedron& a, const Polyhedron& v);

struct PowersReport {
    std::vector<int> schedule;
    std::vector<Rational> gaps;
    bool converged = false;
};

// Gaps of 2^-n A against V along the probe schedule; converged when they are
// non-increasing and the final one is within tol * (initial + 1).
PowersReport powers_of_half_limit(const Polyhedron& a, const Polyhedron& v,
                                  const std::vector<int>& probe_schedule,
                                  const Rational& tol = Rational::pow2(-10));

struct CvCancelReport {
    bool premise = false;
    bool conclusion = false;
    PowersReport b_limit_evidence;  // lim 2^-n B = V, the cancellation hypothesis
};

CvCancelReport cancel_in_CV(const Polyhedron& a, const Polyhedron& b, const Polyhedron& c,
                            const Polyhedron& v);

// Gap-based convergence of a sequence: every gap finite and the trailing half
// within the tolerance.
bool limit_check(const std::vector<Polyhedron>& sequence, const Polyhedron& candidate,
                 const Rational& tol = Rational::pow2(-10));

}  // namespace convexsg
