#include "convexsg/conversion.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>

namespace convexsg {
namespace {

constexpr std::size_t kMaxRows = 256;

// Zero-set bitmask over processed rows.
struct Bits {
    std::array<std::uint64_t, kMaxRows / 64> w{};

    void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
    Bits operator&(const Bits& o) const {
        Bits r;
        for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
};

struct DdRay {
    Vec v;
    Bits zero;
};

Bits zero_set(const Vec& v, const Mat& rows, std::size_t processed) {
    Bits b;
    for (std::size_t i = 0; i < processed; ++i) {
        if (dot(rows[i], v).is_zero()) b.set(i);
    }
    return b;
}

}  // namespace

ConeDescription dd_cone_from_inequalities(const Mat& rows, int dim) {
    if (rows.size() > kMaxRows) throw InputError("double description: too many inequality rows");
    Mat lineality;
    for (int i = 0; i < dim; ++i) {
        Vec e = zero_vec(dim);
        e[static_cast<std::size_t>(i)] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<DdRay> rays;

    for (std::size_t k = 0; k < rows.size(); ++k) {
        const Vec& a = rows[k];

        std::size_t break_idx = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i) {
            if (!dot(a, lineality[i]).is_zero()) {
                break_idx = i;
                break;
            }
        }

        if (break_idx < lineality.size()) {
            // The row cuts the lineality space: one basis vector becomes a
            // ray on the negative side, the rest are projected into {a.y=0}.
            Vec l0 = lineality[break_idx];
            Rational al0 = dot(a, l0);
            if (al0.sign() > 0) {
                l0 = negated(l0);
                al0 = -al0;
            }
            Mat new_lin;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i == break_idx) continue;
                const Vec& l = lineality[i];
                Rational al = dot(a, l);
                new_lin.push_back(al.is_zero() ? l : primitive(sub(l, scaled(al / al0, l0))));
            }
            lineality = std::move(new_lin);
            for (DdRay& r : rays) {
                Rational ar = dot(a, r.v);
                if (!ar.is_zero()) r.v = primitive(sub(r.v, scaled(ar / al0, l0)));
                r.zero = zero_set(r.v, rows, k + 1);
            }
            DdRay nr{primitive(l0), {}};
            nr.zero = zero_set(nr.v, rows, k + 1);
            rays.push_back(std::move(nr));
            continue;
        }

        // Classic double description step in the quotient by the lineality.
        std::vector<std::size_t> plus, minus;
        std::vector<int> side(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            int s = dot(a, rays[i].v).sign();
            side[i] = s;
            if (s > 0) plus.push_back(i);
            if (s < 0) minus.push_back(i);
        }
        if (plus.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                rays[i].zero = zero_set(rays[i].v, rows, k + 1);
            continue;
        }

        std::vector<DdRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (side[i] <= 0) next.push_back(rays[i]);
        }
        for (std::size_t p : plus) {
            for (std::size_t m : minus) {
                // Adjacency: no third extreme ray is tight on every row where
                // both p and m are tight.
                Bits common = rays[p].zero & rays[m].zero;
                bool adjacent = true;
                for (std::size_t w = 0; w < rays.size(); ++w) {
                    if (w == p || w == m) continue;
                    if (common.subset_of(rays[w].zero)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Rational ap = dot(a, rays[p].v);
                Rational am = dot(a, rays[m].v);
                Vec comb = primitive(sub(scaled(ap, rays[m].v), scaled(am, rays[p].v)));
                next.push_back(DdRay{std::move(comb), {}});
            }
        }
        for (DdRay& r : next) r.zero = zero_set(r.v, rows, k + 1);
        rays = std::move(next);
    }

    ConeDescription out;
    out.lineality = rref(std::move(lineality));
    for (DdRay& r : rays) out.rays.push_back(std::move(r.v));
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    return out;
}

std::vector<LinearConstraint> vrep_to_hrep(const Mat& vertices, const Mat& rays, int dim) {
    if (dim > 8) throw InputError("vrep_to_hrep: dimension above 8 not supported");
    if (vertices.empty()) throw InputError("vrep_to_hrep: vertex list must be nonempty");
    if (vertices.size() + rays.size() > 32)
        throw InputError("vrep_to_hrep: more than 32 generators not supported");
    const std::size_t d = static_cast<std::size_t>(dim);
    for (const Vec& v : vertices)
        if (v.size() != d) throw InputError("vrep_to_hrep: vertex dimension mismatch");
    for (const Vec& r : rays)
        if (r.size() != d) throw InputError("vrep_to_hrep: ray dimension mismatch");

    // Valid inequalities c.x <= c0 form the cone { (c, c0) : c.v - c0 <= 0,
    // c.r <= 0 }; its extreme rays are the facets, its lineality the
    // implicit equalities.
    Mat rows;
    for (const Vec& v : vertices) {
        Vec row = v;
        row.push_back(Rational(-1));
        rows.push_back(std::move(row));
    }
    for (const Vec& r : rays) {
        Vec row = r;
        row.push_back(Rational(0));
        rows.push_back(std::move(row));
    }

    ConeDescription cone = dd_cone_from_inequalities(rows, dim + 1);

    std::vector<LinearConstraint> out;
    for (const Vec& l : cone.lineality) {
        Vec coeffs(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(d));
        assert(!is_zero_vec(coeffs) && "trivial equality cannot be valid");
        out.push_back(LinearConstraint{std::move(coeffs), l[d], Sense::Equal});
    }

    // The class of "0 <= 1" may surface with a nonzero representative once
    // reduced modulo the implicit equalities; compare against its canonical
    // projection to drop it.
    Mat proj;
    Vec trivial = zero_vec(dim + 1);
    trivial[d] = 1;
    if (!cone.lineality.empty()) {
        proj = projector_onto_complement(cone.lineality, dim + 1);
        trivial = primitive(mat_apply(proj, trivial));
        assert(!is_zero_vec(trivial));
    }
    for (const Vec& r : cone.rays) {
        Vec y = cone.lineality.empty() ? r : primitive(mat_apply(proj, r));
        Vec coeffs(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(d));
        if (is_zero_vec(coeffs)) continue;
        if (y == trivial) continue;
        out.push_back(LinearConstraint{std::move(coeffs), y[d], Sense::LessEq});
    }

    std::sort(out.begin(), out.end(), [](const LinearConstraint& a, const LinearConstraint& b) {
        if (a.sense != b.sense) return a.sense == Sense::Equal;
        if (a.coeffs != b.coeffs) return lex_less(a.coeffs, b.coeffs);
        return a.bound < b.bound;
    });
    return out;
}

VrepResult hrep_to_vrep(const std::vector<LinearConstraint>& constraints, int dim) {
    if (dim > 8) throw InputError("hrep_to_vrep: dimension above 8 not supported");
    const std::size_t d = static_cast<std::size_t>(dim);

    // Homogenize over (x, t): a.x - b t <= 0 for each constraint, t >= 0.
    Mat rows;
    for (const LinearConstraint& c : constraints) {
        if (c.coeffs.size() != d) throw InputError("hrep_to_vrep: constraint dimension mismatch");
        Vec row = c.coeffs;
        row.push_back(-c.bound);
        if (c.sense == Sense::Equal) rows.push_back(negated(row));
        rows.push_back(std::move(row));
    }
    Vec trow = zero_vec(dim + 1);
    trow[d] = -1;
    rows.push_back(std::move(trow));

    ConeDescription cone = dd_cone_from_inequalities(rows, dim + 1);

    VrepResult out;
    for (const Vec& r : cone.rays) {
        Vec x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(d));
        if (r[d].is_zero()) {
            if (!is_zero_vec(x)) out.rays.push_back(std::move(x));
        } else {
            assert(r[d].sign() > 0);
            out.vertices.push_back(scaled(Rational(1) / r[d], x));
        }
    }
    for (const Vec& l : cone.lineality) {
        assert(l[d].is_zero() && "lineality cannot have a homogenization component");
        Vec x(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(d));
        out.rays.push_back(x);
        out.rays.push_back(negated(x));
    }
    out.empty = out.vertices.empty();
    return out;
}

}  // namespace convexsg
