#include <doctest.h>

#include <random>

#include "convexsg/polyhedron.hpp"

using namespace convexsg;

namespace {

// Independent membership oracle: x in conv(verts)+cone(rays) iff the convex
// combination system is feasible. Used to cross-check the facet enumeration.
bool member_by_combination(const Mat& verts, const Mat& rays, const Vec& x) {
    const std::size_t nv = verts.size(), nr = rays.size(), d = x.size();
    std::vector<LinearConstraint> rows;
    for (std::size_t k = 0; k < d; ++k) {
        Vec row(nv + nr);
        for (std::size_t i = 0; i < nv; ++i) row[i] = verts[i][k];
        for (std::size_t j = 0; j < nr; ++j) row[nv + j] = rays[j][k];
        rows.push_back({std::move(row), x[k], Sense::Equal});
    }
    Vec conv(nv + nr);
    for (std::size_t i = 0; i < nv; ++i) conv[i] = 1;
    rows.push_back({std::move(conv), Rational(1), Sense::Equal});
    return feasible_nonneg(rows, static_cast<int>(nv + nr));
}

bool member_by_hrep(const std::vector<LinearConstraint>& hrep, const Vec& x) {
    for (const LinearConstraint& c : hrep) {
        Rational lhs = dot(c.coeffs, x);
        if (c.sense == Sense::LessEq && lhs > c.bound) return false;
        if (c.sense == Sense::Equal && lhs != c.bound) return false;
    }
    return true;
}

Vec v2(int a, int b) { return {Rational(a), Rational(b)}; }

}  // namespace

TEST_CASE("triangle gives exactly three inequalities") {
    auto hrep = vrep_to_hrep({v2(0, 0), v2(1, 0), v2(0, 1)}, {}, 2);
    REQUIRE(hrep.size() == 3);
    for (const auto& c : hrep) CHECK(c.sense == Sense::LessEq);
    // Every vertex satisfies all rows; interior point strictly.
    for (const Vec& v : {v2(0, 0), v2(1, 0), v2(0, 1)}) CHECK(member_by_hrep(hrep, v));
    CHECK(member_by_hrep(hrep, {Rational(1, 4), Rational(1, 4)}));
    CHECK(!member_by_hrep(hrep, v2(1, 1)));
}

TEST_CASE("quadrant from origin plus axis rays") {
    auto hrep = vrep_to_hrep({v2(0, 0)}, {v2(1, 0), v2(0, 1)}, 2);
    REQUIRE(hrep.size() == 2);
    CHECK(member_by_hrep(hrep, v2(5, 7)));
    CHECK(!member_by_hrep(hrep, v2(-1, 0)));
    CHECK(!member_by_hrep(hrep, v2(0, -1)));
}

TEST_CASE("vertical slab over a segment") {
    // conv{(0,0),(1,0)} + ray (0,1): x >= 0, x <= 1, y >= 0.
    Mat verts = {v2(0, 0), v2(1, 0)};
    Mat rays = {v2(0, 1)};
    auto hrep = vrep_to_hrep(verts, rays, 2);
    REQUIRE(hrep.size() == 3);
    // Cross-check on a rational grid against the combination oracle.
    for (int num = -6; num <= 10; ++num) {
        for (int den = -6; den <= 10; ++den) {
            Vec x = {Rational(num, 4), Rational(den, 4)};
            CHECK(member_by_hrep(hrep, x) == member_by_combination(verts, rays, x));
        }
    }
}

TEST_CASE("rays must satisfy the homogeneous part") {
    Mat verts = {v2(2, 2)};
    Mat rays = {v2(1, 0), v2(1, 1)};
    auto hrep = vrep_to_hrep(verts, rays, 2);
    for (const auto& c : hrep) {
        for (const Vec& r : rays) CHECK(dot(c.coeffs, r) <= Rational(0));
        for (const Vec& v : verts) CHECK(dot(c.coeffs, v) <= c.bound);
    }
}

TEST_CASE("lower-dimensional sets produce equality rows") {
    // A segment in the plane: x + y = 1 plus two bounds.
    auto hrep = vrep_to_hrep({v2(1, 0), v2(0, 1)}, {}, 2);
    int equalities = 0;
    for (const auto& c : hrep) equalities += c.sense == Sense::Equal;
    CHECK(equalities == 1);
    CHECK(hrep.size() == 3);
    CHECK(member_by_hrep(hrep, {Rational(1, 2), Rational(1, 2)}));
    CHECK(!member_by_hrep(hrep, {Rational(1, 2), Rational(1, 4)}));
    CHECK(!member_by_hrep(hrep, v2(2, -1)));
}

TEST_CASE("a single point pins both coordinates") {
    auto hrep = vrep_to_hrep({v2(3, -2)}, {}, 2);
    int equalities = 0;
    for (const auto& c : hrep) equalities += c.sense == Sense::Equal;
    CHECK(equalities == 2);
    CHECK(hrep.size() == 2);
    CHECK(member_by_hrep(hrep, v2(3, -2)));
    CHECK(!member_by_hrep(hrep, v2(3, -1)));
}

TEST_CASE("full plane has an empty description") {
    auto hrep = vrep_to_hrep({v2(0, 0)}, {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)}, 2);
    CHECK(hrep.empty());
}

TEST_CASE("a full line in the plane") {
    auto hrep = vrep_to_hrep({v2(0, 3)}, {v2(1, 0), v2(-1, 0)}, 2);
    REQUIRE(hrep.size() == 1);
    CHECK(hrep[0].sense == Sense::Equal);
    CHECK(member_by_hrep(hrep, v2(100, 3)));
    CHECK(!member_by_hrep(hrep, v2(100, 2)));
}

TEST_CASE("hrep_to_vrep recovers the unit square") {
    std::vector<LinearConstraint> square = {
        {{Rational(1), Rational(0)}, Rational(1), Sense::LessEq},
        {{Rational(-1), Rational(0)}, Rational(0), Sense::LessEq},
        {{Rational(0), Rational(1)}, Rational(1), Sense::LessEq},
        {{Rational(0), Rational(-1)}, Rational(0), Sense::LessEq},
    };
    VrepResult v = hrep_to_vrep(square, 2);
    REQUIRE(!v.empty);
    CHECK(v.vertices.size() == 4);
    CHECK(v.rays.empty());
}

TEST_CASE("hrep_to_vrep detects empty systems") {
    std::vector<LinearConstraint> bad = {
        {{Rational(1)}, Rational(1), Sense::LessEq},
        {{Rational(-1)}, Rational(-2), Sense::LessEq},
    };
    CHECK(hrep_to_vrep(bad, 1).empty);
}

TEST_CASE("hrep_to_vrep keeps recession directions") {
    std::vector<LinearConstraint> halfplane = {
        {{Rational(0), Rational(-1)}, Rational(0), Sense::LessEq},
    };
    VrepResult v = hrep_to_vrep(halfplane, 2);
    REQUIRE(!v.empty);
    CHECK(v.rays.size() >= 3);  // y up plus the x line pair
}

TEST_CASE("round trip: hrep membership matches combination membership on random points") {
    std::mt19937_64 rng(42);
    auto coin = [&](int lo, int hi) { return static_cast<int>(rng() % (hi - lo + 1)) + lo; };
    int checked = 0;
    for (int iter = 0; iter < 20; ++iter) {
        int dim = coin(2, 3);
        int nv = coin(1, 5);
        int nr = coin(0, 2);
        Mat verts, rays;
        for (int i = 0; i < nv; ++i) {
            Vec v(dim);
            for (int k = 0; k < dim; ++k) v[k] = Rational(coin(-5, 5));
            verts.push_back(std::move(v));
        }
        for (int i = 0; i < nr; ++i) {
            Vec r(dim);
            for (int k = 0; k < dim; ++k) r[k] = Rational(coin(-2, 2));
            rays.push_back(std::move(r));
        }
        auto hrep = vrep_to_hrep(verts, rays, dim);
        for (int p = 0; p < 50; ++p) {
            Vec x(dim);
            for (int k = 0; k < dim; ++k) x[k] = Rational(coin(-12, 12), 2);
            CHECK(member_by_hrep(hrep, x) == member_by_combination(verts, rays, x));
            ++checked;
        }
    }
    CHECK(checked == 1000);
}

TEST_CASE("V to H to V round-trips to the same canonical set") {
    std::mt19937_64 rng(77);
    auto coin = [&](int lo, int hi) { return static_cast<int>(rng() % (hi - lo + 1)) + lo; };
    for (int iter = 0; iter < 100; ++iter) {
        int dim = coin(2, 4);
        Mat verts, rays;
        int nv = coin(1, 5), nr = coin(0, 3);
        for (int i = 0; i < nv; ++i) {
            Vec v(dim);
            for (auto& x : v) x = Rational(coin(-5, 5));
            verts.push_back(std::move(v));
        }
        for (int i = 0; i < nr; ++i) {
            Vec r(dim);
            for (auto& x : r) x = Rational(coin(-2, 2));
            rays.push_back(std::move(r));
        }
        // Occasionally force a full line.
        if (iter % 5 == 0 && !rays.empty()) rays.push_back(negated(rays[0]));

        Polyhedron p = Polyhedron::make(verts, rays, dim);
        auto hrep = vrep_to_hrep(p.vertices(), p.rays(), dim);
        VrepResult back = hrep_to_vrep(hrep, dim);
        REQUIRE(!back.empty);
        CHECK(Polyhedron::make(back.vertices, back.rays, dim) == p);
    }
}

TEST_CASE("conversion caps are enforced") {
    Mat verts = {Vec(9, Rational(0))};
    CHECK_THROWS_AS(vrep_to_hrep(verts, {}, 9), InputError);
    Mat many(33, Vec{Rational(0), Rational(0)});
    CHECK_THROWS_AS(vrep_to_hrep(many, {}, 2), InputError);
}
