#include "convexsg/mrh.hpp"

#include "convexsg/semigroup.hpp"

namespace convexsg {
namespace {

void require_same_cone(const MrhClass& x, const MrhClass& y) {
    if (!(x.cone == y.cone)) throw InputError("classes live over different cones");
}

}  // namespace

bool in_CV(const Polyhedron& a, const Polyhedron& v) {
    if (a.dim() != v.dim()) throw InputError("polyhedron dimension mismatch");
    if (!v.is_cone()) throw InputError("in_CV requires a cone");
    return recession_cone(a) == v;
}

Polyhedron cv_witness(const Polyhedron& a) {
    Mat verts = a.vertices();
    for (const Vec& p : a.vertices()) verts.push_back(negated(p));
    verts.push_back(zero_vec(a.dim()));
    return Polyhedron::make(std::move(verts), {}, a.dim());
}

MrhClass mrh_make(const Polyhedron& a, const Polyhedron& b, const Polyhedron& v) {
    if (!v.is_cone()) throw InputError("mrh_make requires a cone");
    if (!is_pointed(v)) throw InputError("mrh_make requires a pointed cone");
    if (!in_CV(a, v)) throw InputError("first component is not in C_V: " + a.str());
    if (!in_CV(b, v)) throw InputError("second component is not in C_V: " + b.str());
    return MrhClass{v, a, b};
}

bool mrh_equivalent(const MrhClass& x, const MrhClass& y) {
    require_same_cone(x, y);
    return minkowski_sum(x.pos, y.neg) == minkowski_sum(x.neg, y.pos);
}

MrhClass mrh_add(const MrhClass& x, const MrhClass& y) {
    require_same_cone(x, y);
    return MrhClass{x.cone, minkowski_sum(x.pos, y.pos), minkowski_sum(x.neg, y.neg)};
}

MrhClass mrh_scale(const Rational& lambda, const MrhClass& x) {
    if (lambda.sign() >= 0) {
        return MrhClass{x.cone, scale(lambda, x.pos, x.cone), scale(lambda, x.neg, x.cone)};
    }
    return MrhClass{x.cone, scale(-lambda, x.neg, x.cone), scale(-lambda, x.pos, x.cone)};
}

MrhClass embed_j(const Polyhedron& a, const Polyhedron& v) { return mrh_make(a, v, v); }

PowersReport powers_of_half_limit(const Polyhedron& a, const Polyhedron& v,
                                  const std::vector<int>& probe_schedule, const Rational& tol) {
    if (!in_CV(a, v)) throw InputError("powers_of_half_limit requires a C_V member");
    PowersReport rep;
    rep.schedule = probe_schedule;
    for (int n : probe_schedule) {
        GapValue g = hausdorff_gap(scale(Rational::pow2(-n), a, v), v);
        if (!g.finite) return rep;  // cannot happen for C_V members; stay safe
        rep.gaps.push_back(g.value);
    }
    rep.converged = !rep.gaps.empty();
    for (std::size_t i = 1; i < rep.gaps.size(); ++i) {
        if (rep.gaps[i] > rep.gaps[i - 1]) rep.converged = false;
    }
    if (rep.converged)
        rep.converged = rep.gaps.back() <= tol * (rep.gaps.front() + Rational(1));
    return rep;
}

CvCancelReport cancel_in_CV(const Polyhedron& a, const Polyhedron& b, const Polyhedron& c,
                            const Polyhedron& v) {
    for (const Polyhedron* p : {&a, &b, &c}) {
        if (!in_CV(*p, v))
            throw InputError("cancel_in_CV: set is not in C_V: " + p->str());
    }
    CvCancelReport rep;
    rep.premise = subset(minkowski_sum(a, b), minkowski_sum(b, c));
    rep.conclusion = subset(a, c);
    rep.b_limit_evidence = powers_of_half_limit(b, v, default_probe_schedule());
    return rep;
}

bool limit_check(const std::vector<Polyhedron>& sequence, const Polyhedron& candidate,
                 const Rational& tol) {
    if (sequence.empty()) return false;
    std::vector<Rational> gaps;
    for (const Polyhedron& p : sequence) {
        GapValue g = hausdorff_gap(p, candidate);
        if (!g.finite) return false;
        gaps.push_back(g.value);
    }
    for (std::size_t i = gaps.size() / 2; i < gaps.size(); ++i) {
        if (gaps[i] > tol) return false;
    }
    return true;
}

}  // namespace convexsg
