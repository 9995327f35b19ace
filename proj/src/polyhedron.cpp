#include "convexsg/polyhedron.hpp"

#include <algorithm>
#include <cassert>

namespace convexsg {
namespace {

// Combination system over nonnegative weights (lambda per vertex, mu per
// ray): sum lambda_i v_i + sum mu_j r_j = target, sum lambda_i = 1.
std::vector<LinearConstraint> combination_rows(const Mat& verts, const Mat& rays,
                                               const Vec& target) {
    const std::size_t nv = verts.size(), nr = rays.size(), d = target.size();
    std::vector<LinearConstraint> rows;
    rows.reserve(d + 1);
    for (std::size_t k = 0; k < d; ++k) {
        Vec row(nv + nr);
        for (std::size_t i = 0; i < nv; ++i) row[i] = verts[i][k];
        for (std::size_t j = 0; j < nr; ++j) row[nv + j] = rays[j][k];
        rows.push_back(LinearConstraint{std::move(row), target[k], Sense::Equal});
    }
    if (nv > 0) {
        Vec row(nv + nr);
        for (std::size_t i = 0; i < nv; ++i) row[i] = 1;
        rows.push_back(LinearConstraint{std::move(row), Rational(1), Sense::Equal});
    }
    return rows;
}

bool in_convex_hull(const Mat& verts, const Mat& rays, const Vec& x) {
    if (verts.empty()) return false;
    return feasible_nonneg(combination_rows(verts, rays, x),
                           static_cast<int>(verts.size() + rays.size()));
}

bool ray_in_cone(const Vec& r, const Mat& rays) {
    if (rays.empty()) return is_zero_vec(r);
    return feasible_nonneg(combination_rows({}, rays, r), static_cast<int>(rays.size()));
}

Mat sorted_unique(Mat vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

void check_dim(const Polyhedron& a, const Polyhedron& b) {
    if (a.dim() != b.dim()) throw InputError("polyhedron dimension mismatch");
}

}  // namespace

std::pair<Mat, Mat> remove_redundant_generators(Mat vertices, Mat rays, int dim) {
    if (dim <= 0) throw InputError("polyhedron dimension must be positive");
    if (vertices.empty()) throw InputError("polyhedron requires a nonempty vertex list");
    const std::size_t d = static_cast<std::size_t>(dim);
    for (const Vec& v : vertices)
        if (v.size() != d) throw InputError("vertex dimension mismatch");
    for (const Vec& r : rays)
        if (r.size() != d) throw InputError("ray dimension mismatch");

    Mat prim;
    for (const Vec& r : rays) {
        Vec p = primitive(r);
        if (!is_zero_vec(p)) prim.push_back(std::move(p));
    }
    rays = sorted_unique(std::move(prim));

    // Lineality space: spanned by the generators whose negative stays in the
    // cone. Vertices and one-sided rays are reduced modulo it so that the
    // representation is canonical even for sets containing lines.
    Mat two_sided;
    for (const Vec& r : rays) {
        if (ray_in_cone(negated(r), rays)) two_sided.push_back(r);
    }
    Mat lin_basis = rref(two_sided);
    if (!lin_basis.empty()) {
        Mat proj = projector_onto_complement(lin_basis, dim);
        for (Vec& v : vertices) v = mat_apply(proj, v);
        Mat projected;
        for (const Vec& r : rays) {
            Vec p = primitive(mat_apply(proj, r));
            if (!is_zero_vec(p)) projected.push_back(std::move(p));
        }
        rays = sorted_unique(std::move(projected));
    }

    // Extreme rays of the (now pointed) direction cone.
    std::vector<bool> keep_ray(rays.size(), true);
    for (std::size_t i = 0; i < rays.size(); ++i) {
        Mat others;
        for (std::size_t j = 0; j < rays.size(); ++j)
            if (j != i && keep_ray[j]) others.push_back(rays[j]);
        if (ray_in_cone(rays[i], others)) keep_ray[i] = false;
    }
    Mat min_rays;
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (keep_ray[i]) min_rays.push_back(rays[i]);

    // Extreme points among the vertices.
    vertices = sorted_unique(std::move(vertices));
    std::vector<bool> keep_vert(vertices.size(), true);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Mat others;
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (j != i && keep_vert[j]) others.push_back(vertices[j]);
        if (in_convex_hull(others, min_rays, vertices[i])) keep_vert[i] = false;
    }
    Mat min_verts;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (keep_vert[i]) min_verts.push_back(vertices[i]);

    for (const Vec& b : lin_basis) {
        min_rays.push_back(b);
        min_rays.push_back(negated(b));
    }
    std::sort(min_rays.begin(), min_rays.end(), lex_less);
    return {std::move(min_verts), std::move(min_rays)};
}

Polyhedron Polyhedron::make(Mat vertices, Mat rays, int dim) {
    auto [v, r] = remove_redundant_generators(std::move(vertices), std::move(rays), dim);
    return Polyhedron(dim, std::move(v), std::move(r));
}

Polyhedron Polyhedron::point(Vec p) {
    int dim = static_cast<int>(p.size());
    return make({std::move(p)}, {}, dim);
}

Polyhedron Polyhedron::box(const Vec& lo, const Vec& hi) {
    if (lo.size() != hi.size()) throw InputError("box corner dimension mismatch");
    const std::size_t d = lo.size();
    for (std::size_t k = 0; k < d; ++k)
        if (hi[k] < lo[k]) throw InputError("box with inverted bounds");
    Mat verts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Vec v(d);
        for (std::size_t k = 0; k < d; ++k) v[k] = (mask >> k & 1) ? hi[k] : lo[k];
        verts.push_back(std::move(v));
    }
    return make(std::move(verts), {}, static_cast<int>(d));
}

Polyhedron Polyhedron::cone_from_rays(Mat rays, int dim) {
    return make({zero_vec(dim)}, std::move(rays), dim);
}

bool Polyhedron::is_cone() const {
    return vertices_.size() == 1 && is_zero_vec(vertices_[0]);
}

std::string Polyhedron::str() const {
    std::string s = "conv{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) s += ", ";
        s += vec_str(vertices_[i]);
    }
    s += "}";
    if (!rays_.empty()) {
        s += " + cone{";
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            if (i) s += ", ";
            s += vec_str(rays_[i]);
        }
        s += "}";
    }
    return s;
}

Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b) {
    check_dim(a, b);
    Mat verts;
    verts.reserve(a.vertices().size() * b.vertices().size());
    for (const Vec& va : a.vertices())
        for (const Vec& vb : b.vertices()) verts.push_back(add(va, vb));
    Mat rays = a.rays();
    rays.insert(rays.end(), b.rays().begin(), b.rays().end());
    return Polyhedron::make(std::move(verts), std::move(rays), a.dim());
}

Polyhedron scale(const Rational& lambda, const Polyhedron& a, const Polyhedron& zero_value) {
    if (lambda.sign() < 0)
        throw InputError("negative scaling is only defined on quotient classes");
    if (zero_value.dim() != a.dim()) throw InputError("polyhedron dimension mismatch");
    if (!zero_value.is_cone()) throw InputError("zero_value must be a cone");
    if (lambda.is_zero()) return zero_value;
    Mat verts;
    verts.reserve(a.vertices().size());
    for (const Vec& v : a.vertices()) verts.push_back(scaled(lambda, v));
    return Polyhedron::make(std::move(verts), a.rays(), a.dim());
}

std::optional<Rational> support_function(const Polyhedron& a, const Vec& direction) {
    if (direction.size() != static_cast<std::size_t>(a.dim()))
        throw InputError("direction dimension mismatch");
    for (const Vec& r : a.rays()) {
        if (dot(direction, r).sign() > 0) return std::nullopt;
    }
    Rational best = dot(direction, a.vertices()[0]);
    for (const Vec& v : a.vertices()) best = std::max(best, dot(direction, v));
    return best;
}

bool contains_point(const Polyhedron& a, const Vec& x) {
    if (x.size() != static_cast<std::size_t>(a.dim()))
        throw InputError("point dimension mismatch");
    return in_convex_hull(a.vertices(), a.rays(), x);
}

bool subset(const Polyhedron& a, const Polyhedron& b) {
    check_dim(a, b);
    for (const Vec& v : a.vertices())
        if (!contains_point(b, v)) return false;
    for (const Vec& r : a.rays())
        if (!ray_in_cone(r, b.rays())) return false;
    return true;
}

std::optional<Polyhedron> erode(const Polyhedron& a, const Polyhedron& b) {
    check_dim(a, b);
    std::vector<LinearConstraint> shifted;
    for (const LinearConstraint& c : vrep_to_hrep(a.vertices(), a.rays(), a.dim())) {
        // Each halfspace moves inward by the support of B; equality rows are
        // handled as their two halfspaces.
        auto shift_one = [&](Vec coeffs, const Rational& bound) -> bool {
            std::optional<Rational> s = support_function(b, coeffs);
            if (!s) return false;
            shifted.push_back(LinearConstraint{std::move(coeffs), bound - *s, Sense::LessEq});
            return true;
        };
        if (!shift_one(c.coeffs, c.bound)) return std::nullopt;
        if (c.sense == Sense::Equal) {
            if (!shift_one(negated(c.coeffs), -c.bound)) return std::nullopt;
        }
    }
    VrepResult v = hrep_to_vrep(shifted, a.dim());
    if (v.empty) return std::nullopt;
    return Polyhedron::make(std::move(v.vertices), std::move(v.rays), a.dim());
}

Polyhedron recession_cone(const Polyhedron& a) {
    return Polyhedron::cone_from_rays(a.rays(), a.dim());
}

bool is_pointed(const Polyhedron& k) {
    if (!k.is_cone()) throw InputError("is_pointed requires a cone");
    for (const Vec& r : k.rays()) {
        if (ray_in_cone(negated(r), k.rays())) return false;
    }
    return true;
}

NarrownessReport narrowness_report(const Polyhedron& a) {
    // Norm-unit direction sequences of a polyhedron always subconverge, so
    // narrowness is automatic; the generators span its direction cone.
    NarrownessReport rep;
    rep.is_narrow = true;
    rep.direction_generators = a.rays();
    return rep;
}

Rational linf_distance(const Vec& p, const Polyhedron& a) {
    const std::size_t nv = a.vertices().size(), nr = a.rays().size();
    const std::size_t d = p.size();
    std::vector<LinearConstraint> rows;
    // Variables: lambda, mu, t. |comb_k - p_k| <= t per coordinate.
    for (std::size_t k = 0; k < d; ++k) {
        for (int sign : {+1, -1}) {
            Vec row(nv + nr + 1);
            for (std::size_t i = 0; i < nv; ++i)
                row[i] = sign > 0 ? a.vertices()[i][k] : -a.vertices()[i][k];
            for (std::size_t j = 0; j < nr; ++j)
                row[nv + j] = sign > 0 ? a.rays()[j][k] : -a.rays()[j][k];
            row[nv + nr] = -1;
            rows.push_back(LinearConstraint{std::move(row),
                                            sign > 0 ? p[k] : -p[k], Sense::LessEq});
        }
    }
    Vec conv_row(nv + nr + 1);
    for (std::size_t i = 0; i < nv; ++i) conv_row[i] = 1;
    rows.push_back(LinearConstraint{std::move(conv_row), Rational(1), Sense::Equal});

    Vec obj(nv + nr + 1);
    obj[nv + nr] = 1;
    LpOutcome out = lp_solve_nonneg(rows, obj, Goal::Minimize);
    assert(out.status == LpStatus::Optimal && "distance program is feasible and bounded");
    return *out.objective_value;
}

GapValue hausdorff_gap(const Polyhedron& a, const Polyhedron& b) {
    check_dim(a, b);
    if (recession_cone(a) != recession_cone(b)) return GapValue::infinity();
    Rational r;
    for (const Vec& v : a.vertices()) r = std::max(r, linf_distance(v, b));
    for (const Vec& v : b.vertices()) r = std::max(r, linf_distance(v, a));
    return GapValue::of(r);
}

CancelReport order_cancel(const Polyhedron& a, const Polyhedron& b, const Polyhedron& c) {
    check_dim(a, b);
    check_dim(a, c);
    CancelReport rep;
    rep.premise = subset(minkowski_sum(a, b), minkowski_sum(b, c));
    rep.conclusion = subset(a, c);
    Polyhedron rb = recession_cone(b), rc = recession_cone(c);
    rep.recc_b_in_recc_c = subset(rb, rc);
    rep.recc_c_pointed = is_pointed(rc);
    return rep;
}

}  // namespace convexsg
