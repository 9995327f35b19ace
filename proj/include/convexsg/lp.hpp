#pragma once

#include <optional>
#include <vector>

#include "convexsg/linalg.hpp"

namespace convexsg {

enum class Sense { LessEq, Equal };

struct LinearConstraint {
    Vec coeffs;
    Rational bound;
    Sense sense = Sense::LessEq;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };
enum class Goal { Maximize, Minimize };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::optional<Vec> witness;
    std::optional<Rational> objective_value;
    std::optional<Vec> ray_certificate;  // feasible improving direction when unbounded
};

// Exact two-phase simplex with Bland's rule: deterministic, cycle-free, no
// floating point. Variables are free (unrestricted sign).
LpOutcome lp_solve(const std::vector<LinearConstraint>& constraints, const Vec& objective,
                   Goal goal);

// Same solver with every variable constrained to be >= 0. All combination
// systems (convex weights, cone multipliers) go through this entry point,
// which avoids the free-variable split.
LpOutcome lp_solve_nonneg(const std::vector<LinearConstraint>& constraints, const Vec& objective,
                          Goal goal);

// Feasibility shorthand for lp_solve_nonneg with a zero objective.
bool feasible_nonneg(const std::vector<LinearConstraint>& constraints, int num_vars);

}  // namespace convexsg
