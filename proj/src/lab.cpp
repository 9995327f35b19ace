#include "convexsg/lab.hpp"

#include <cassert>

namespace convexsg {
namespace {

Vec unit(int dim, int i, const Rational& s = Rational(1)) {
    Vec e = zero_vec(dim);
    e[static_cast<std::size_t>(i)] = s;
    return e;
}

LabFact fact(std::string name, std::string relation, bool verified, Rational value) {
    return LabFact{std::move(name), std::move(relation), verified, std::move(value)};
}

}  // namespace

std::optional<Rational> max_functional_lp(const Polyhedron& p, const Vec& c) {
    const std::size_t nv = p.vertices().size(), nr = p.rays().size();
    std::vector<LinearConstraint> rows;
    Vec conv(nv + nr);
    for (std::size_t i = 0; i < nv; ++i) conv[i] = 1;
    rows.push_back(LinearConstraint{std::move(conv), Rational(1), Sense::Equal});
    Vec obj(nv + nr);
    for (std::size_t i = 0; i < nv; ++i) obj[i] = dot(c, p.vertices()[i]);
    for (std::size_t j = 0; j < nr; ++j) obj[nv + j] = dot(c, p.rays()[j]);
    LpOutcome out = lp_solve_nonneg(rows, obj, Goal::Maximize);
    if (out.status == LpStatus::Unbounded) return std::nullopt;
    assert(out.status == LpStatus::Optimal);
    return out.objective_value;
}

std::pair<Polyhedron, Polyhedron> build_halfline_pair(int n) {
    if (n < 1 || n > 12) throw InputError("halfline truncation index must be in [1, 12]");
    const int dim = n + 1;
    Mat va, vb;
    for (int k = 0; k <= n; ++k) {
        Rational coef = Rational::pow2(k) * Rational(k);
        Vec a = unit(dim, 0, Rational(k));
        a[static_cast<std::size_t>(k)] += coef;
        Vec b = unit(dim, 0, Rational(k));
        b[static_cast<std::size_t>(k)] -= coef;
        va.push_back(std::move(a));
        vb.push_back(std::move(b));
    }
    return {Polyhedron::make(std::move(va), {}, dim),
            Polyhedron::make(std::move(vb), {}, dim)};
}

TruncationReport verify_halfline_emergence(int n) {
    if (n < 2) throw InputError("halfline verification needs N >= 2");
    auto [a, b] = build_halfline_pair(n);
    Polyhedron sum = minkowski_sum(a, b);
    const int dim = n + 1;

    TruncationReport rep;
    rep.experiment = "halfline";
    rep.indices = {n};

    // Reach along e0: max t with t e0 in the sum, decided over the
    // combination weights of the sum's generators.
    const std::size_t nv = sum.vertices().size();
    std::vector<LinearConstraint> rows;
    for (int k = 0; k < dim; ++k) {
        Vec row(nv + 1);
        for (std::size_t i = 0; i < nv; ++i) row[i] = sum.vertices()[i][static_cast<std::size_t>(k)];
        row[nv] = k == 0 ? Rational(-1) : Rational(0);
        rows.push_back(LinearConstraint{std::move(row), Rational(0), Sense::Equal});
    }
    Vec conv(nv + 1);
    for (std::size_t i = 0; i < nv; ++i) conv[i] = 1;
    rows.push_back(LinearConstraint{std::move(conv), Rational(1), Sense::Equal});
    Vec obj(nv + 1);
    obj[nv] = 1;
    LpOutcome reach = lp_solve_nonneg(rows, obj, Goal::Maximize);
    assert(reach.status == LpStatus::Optimal && "the truncated sum is a polytope");
    Rational reach_value = *reach.objective_value;
    rep.facts.push_back(fact("e0_reach", "max{t : t e0 in A+B} = 2N",
                             reach_value == Rational(2 * n), reach_value));

    bool seg = contains_point(sum, zero_vec(dim)) &&
               contains_point(sum, unit(dim, 0, reach_value));
    rep.facts.push_back(fact("segment_in_sum", "[0, 2N] e0 subset A+B (endpoints + convexity)",
                             seg, reach_value));

    Rational d = linf_distance(unit(dim, 0), a);
    rep.facts.push_back(fact("e0_distance", "dist_inf(e0, A_N) >= 1/3",
                             d >= Rational(1, 3), d));

    bool recc_trivial = recession_cone(sum).rays().empty() && recession_cone(a).rays().empty() &&
                        recession_cone(b).rays().empty();
    rep.facts.push_back(fact("recc_trivial", "recc A_N = recc B_N = recc(A_N+B_N) = {0}",
                             recc_trivial, Rational(0)));
    return rep;
}

std::pair<Polyhedron, Polyhedron> build_nonclosed_pair(int n) {
    if (n < 2 || n > 12) throw InputError("nonclosed truncation index must be in [2, 12]");
    const int dim = n + 1;
    Mat va, vb;
    for (int k = 1; k <= n; ++k) {
        Rational coef = Rational::pow2(k) + Rational(1);  // a_k = 2^k + 1 > 2^k
        Vec a = unit(dim, 0, Rational(1, k));
        a[static_cast<std::size_t>(k)] += coef;
        Vec b = unit(dim, 0, Rational(1, k));
        b[static_cast<std::size_t>(k)] -= coef;
        va.push_back(std::move(a));
        vb.push_back(std::move(b));
    }
    return {Polyhedron::make(std::move(va), {}, dim),
            Polyhedron::make(std::move(vb), {}, dim)};
}

TruncationReport verify_nonclosedness_trend(const std::vector<int>& n_list) {
    TruncationReport rep;
    rep.experiment = "nonclosed";
    rep.indices = n_list;
    rep.note =
        "generator index runs from n = 1; the n = 0 term of the defining formula is undefined";
    for (int n : n_list) {
        auto [a, b] = build_nonclosed_pair(n);
        Polyhedron sum = minkowski_sum(a, b);
        Rational d = linf_distance(zero_vec(n + 1), sum);
        std::string tag = "N=" + std::to_string(n);
        rep.facts.push_back(
            fact("distance_" + tag, "dist_inf(0, A+B) = 2/N", d == Rational(2, n), d));
        rep.facts.push_back(fact("origin_outside_" + tag, "0 not in A+B",
                                 !contains_point(sum, zero_vec(n + 1)), d));
        rep.facts.push_back(
            fact("scaled_distance_" + tag, "N * d(N) = 2", d * Rational(n) == Rational(2),
                 d * Rational(n)));
    }
    return rep;
}

Polyhedron build_growing_cube_hull(int n) {
    if (n < 1 || n > 6) throw InputError("cube hull truncation index must be in [1, 6]");
    Mat verts;
    for (int k = 1; k <= n; ++k) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            Vec v = zero_vec(n);
            for (int i = 0; i < k; ++i)
                v[static_cast<std::size_t>(i)] = (mask >> i & 1) ? Rational(2 * k) : Rational(k);
            verts.push_back(std::move(v));
        }
    }
    return Polyhedron::make(std::move(verts), {}, n);
}

TruncationReport verify_growing_cubes(int n) {
    Polyhedron hull = build_growing_cube_hull(n);
    TruncationReport rep;
    rep.experiment = "cubes";
    rep.indices = {n};

    Vec ones(static_cast<std::size_t>(n), Rational(1));
    std::optional<Rational> top = max_functional_lp(hull, ones);
    assert(top);
    rep.facts.push_back(fact("max_coordinate_sum", "max <1,x> over the hull = 2N*N",
                             *top == Rational(2 * n * n), *top));
    rep.facts.push_back(fact("recc_trivial", "recc of the hull = {0}",
                             recession_cone(hull).rays().empty(), Rational(0)));
    return rep;
}

}  // namespace convexsg
