#include "convexsg/lp.hpp"

#include <algorithm>
#include <cassert>

namespace convexsg {
namespace {

// Standard form: minimize c.x subject to A x = b, x >= 0.
struct StandardForm {
    Mat a;
    Vec b;
    Vec c;
};

struct StandardResult {
    LpStatus status = LpStatus::Infeasible;
    Vec x;
    Rational objective;
    Vec ray;
};

class Simplex {
public:
    explicit Simplex(StandardForm sf) : a_(std::move(sf.a)), b_(std::move(sf.b)), c_(std::move(sf.c)) {
        m_ = a_.size();
        n_ = c_.size();
        for (std::size_t i = 0; i < m_; ++i) {
            if (b_[i].sign() < 0) {
                a_[i] = negated(a_[i]);
                b_[i] = -b_[i];
            }
        }
    }

    StandardResult run() {
        if (!phase1()) return {LpStatus::Infeasible, {}, Rational(0), {}};
        return phase2();
    }

private:
    // tableau_: m_ rows over columns [0, width_) plus rhs at index width_.
    // basis_[i] is the column that is basic in row i.
    Mat tableau_;
    Vec rhs_;
    Vec cost_;            // reduced costs over [0, width_)
    Rational cost_rhs_;   // negative of the current objective value
    std::vector<std::size_t> basis_;
    Mat a_;
    Vec b_;
    Vec c_;
    std::size_t m_ = 0, n_ = 0, width_ = 0;

    void pivot(std::size_t row, std::size_t col) {
        Rational inv = Rational(1) / tableau_[row][col];
        tableau_[row] = scaled(inv, tableau_[row]);
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || tableau_[i][col].is_zero()) continue;
            Rational f = tableau_[i][col];
            tableau_[i] = sub(tableau_[i], scaled(f, tableau_[row]));
            rhs_[i] -= f * rhs_[row];
        }
        if (!cost_[col].is_zero()) {
            Rational f = cost_[col];
            cost_ = sub(cost_, scaled(f, tableau_[row]));
            cost_rhs_ -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    // Bland's rule: entering = lowest-index negative reduced cost among
    // columns < limit; leaving = lexicographically lowest basic variable
    // among minimum-ratio rows. Returns false on unboundedness.
    bool optimize(std::size_t limit, std::size_t* unbounded_col) {
        for (;;) {
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (cost_[j].sign() < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == limit) return true;

            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tableau_[i][enter].sign() <= 0) continue;
                Rational ratio = rhs_[i] / tableau_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) {
                if (unbounded_col) *unbounded_col = enter;
                return false;
            }
            pivot(leave, enter);
        }
    }

    bool phase1() {
        width_ = n_ + m_;
        tableau_.assign(m_, Vec(width_));
        rhs_ = b_;
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) tableau_[i][j] = a_[i][j];
            tableau_[i][n_ + i] = 1;
            basis_[i] = n_ + i;
        }
        // Cost row stores reduced costs and, in the rhs slot, minus the
        // current objective value.
        cost_.assign(width_, Rational(0));
        cost_rhs_ = Rational(0);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) cost_[j] -= tableau_[i][j];
            cost_rhs_ -= rhs_[i];
        }
        bool ok = optimize(n_, nullptr);
        assert(ok && "phase 1 objective is bounded below by zero");
        (void)ok;
        if (!cost_rhs_.is_zero()) return false;  // infeasible

        // Drive artificials out of the basis; rows that cannot pivot are
        // redundant and get removed.
        for (std::size_t i = 0; i < m_;) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t col = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (!tableau_[i][j].is_zero()) {
                    col = j;
                    break;
                }
            }
            if (col < n_) {
                pivot(i, col);
                ++i;
            } else {
                tableau_.erase(tableau_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
            }
        }
        return true;
    }

    StandardResult phase2() {
        cost_.assign(width_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) cost_[j] = c_[j];
        cost_rhs_ = Rational(0);
        // Price out the basic columns.
        for (std::size_t i = 0; i < m_; ++i) {
            std::size_t bj = basis_[i];
            if (cost_[bj].is_zero()) continue;
            Rational f = cost_[bj];
            cost_ = sub(cost_, scaled(f, tableau_[i]));
            cost_rhs_ -= f * rhs_[i];
        }

        std::size_t ucol = 0;
        if (!optimize(n_, &ucol)) {
            Vec ray(n_);
            ray[ucol] = 1;
            for (std::size_t i = 0; i < m_; ++i) {
                if (basis_[i] < n_) ray[basis_[i]] = -tableau_[i][ucol];
            }
            StandardResult res;
            res.status = LpStatus::Unbounded;
            res.x = current_point();
            res.ray = std::move(ray);
            return res;
        }
        StandardResult res;
        res.status = LpStatus::Optimal;
        res.x = current_point();
        res.objective = -cost_rhs_;
        return res;
    }

    Vec current_point() const {
        Vec x(n_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
        }
        return x;
    }
};

void check_dimensions(const std::vector<LinearConstraint>& constraints, const Vec& objective) {
    const std::size_t dim = objective.size();
    for (const LinearConstraint& c : constraints) {
        if (c.coeffs.size() != dim) throw InputError("constraint dimension mismatch");
    }
}

// Builds the standard form for variables already restricted to >= 0:
// inequality rows get one slack variable each.
StandardForm build_nonneg(const std::vector<LinearConstraint>& constraints, const Vec& c) {
    const std::size_t n = c.size();
    std::size_t slacks = 0;
    for (const LinearConstraint& lc : constraints)
        if (lc.sense == Sense::LessEq) ++slacks;

    StandardForm sf;
    sf.c = c;
    sf.c.resize(n + slacks);
    std::size_t slack = 0;
    for (const LinearConstraint& lc : constraints) {
        Vec row(n + slacks);
        for (std::size_t j = 0; j < n; ++j) row[j] = lc.coeffs[j];
        if (lc.sense == Sense::LessEq) row[n + slack++] = 1;
        sf.a.push_back(std::move(row));
        sf.b.push_back(lc.bound);
    }
    return sf;
}

LpOutcome finish(const StandardResult& res, std::size_t n, const Vec& objective,
                 auto&& extract) {
    LpOutcome out;
    out.status = res.status;
    if (res.status == LpStatus::Infeasible) return out;
    Vec x = extract(res.x, n);
    if (res.status == LpStatus::Optimal) {
        out.witness = x;
        Rational value = dot(objective, x);
        out.objective_value = value;
    } else {
        out.witness = std::move(x);
        out.ray_certificate = extract(res.ray, n);
    }
    return out;
}

}  // namespace

LpOutcome lp_solve_nonneg(const std::vector<LinearConstraint>& constraints, const Vec& objective,
                          Goal goal) {
    check_dimensions(constraints, objective);
    Vec c = goal == Goal::Minimize ? objective : negated(objective);
    StandardForm sf = build_nonneg(constraints, c);
    StandardResult res = Simplex(std::move(sf)).run();
    return finish(res, objective.size(), objective,
                  [](const Vec& full, std::size_t n) { return Vec(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n)); });
}

LpOutcome lp_solve(const std::vector<LinearConstraint>& constraints, const Vec& objective,
                   Goal goal) {
    check_dimensions(constraints, objective);
    const std::size_t n = objective.size();

    // Free variables split as x = u - w with u, w >= 0.
    std::vector<LinearConstraint> split;
    split.reserve(constraints.size());
    for (const LinearConstraint& lc : constraints) {
        LinearConstraint s;
        s.sense = lc.sense;
        s.bound = lc.bound;
        s.coeffs.resize(2 * n);
        for (std::size_t j = 0; j < n; ++j) {
            s.coeffs[j] = lc.coeffs[j];
            s.coeffs[n + j] = -lc.coeffs[j];
        }
        split.push_back(std::move(s));
    }
    Vec obj2(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        obj2[j] = objective[j];
        obj2[n + j] = -objective[j];
    }

    Vec c = goal == Goal::Minimize ? obj2 : negated(obj2);
    StandardForm sf = build_nonneg(split, c);
    StandardResult res = Simplex(std::move(sf)).run();
    return finish(res, n, objective,
                  [n](const Vec& full, std::size_t) {
                      Vec x(n);
                      for (std::size_t j = 0; j < n; ++j) x[j] = full[j] - full[n + j];
                      return x;
                  });
}

bool feasible_nonneg(const std::vector<LinearConstraint>& constraints, int num_vars) {
    return lp_solve_nonneg(constraints, zero_vec(num_vars), Goal::Minimize).status ==
           LpStatus::Optimal;
}

}  // namespace convexsg
