#include <doctest.h>

#include "convexsg/mrh.hpp"
#include "convexsg/random_sets.hpp"
#include "convexsg/suites.hpp"

using namespace convexsg;

namespace {

Vec v2(long long a, long long b) { return {Rational(a), Rational(b)}; }

Polyhedron quadrant() { return quadrant_cone(); }

Polyhedron over_cone(const Mat& verts, const Polyhedron& v) {
    return Polyhedron::make(verts, v.rays(), v.dim());
}

}  // namespace

TEST_CASE("C_V membership is recession-cone equality") {
    CHECK(in_CV(over_cone({v2(1, 1)}, quadrant()), quadrant()));
    CHECK(!in_CV(quadrant(), Polyhedron::cone_from_rays({v2(1, 0)}, 2)));
    CHECK_THROWS_AS(
        in_CV(quadrant(), Polyhedron::box(v2(0, 0), v2(1, 1))), InputError);
}

TEST_CASE("membership comes with a constructive bounded witness") {
    Polyhedron v = Polyhedron::cone_from_rays({v2(1, 1)}, 2);
    Polyhedron a = Polyhedron::make({v2(0, 0), v2(2, 1)}, v.rays(), 2);
    REQUIRE(in_CV(a, v));
    Polyhedron b = cv_witness(a);
    CHECK(b.is_polytope());
    // Both inclusions of the finite-distance characterization.
    CHECK(subset(a, minkowski_sum(v, b)));
    CHECK(subset(v, minkowski_sum(a, b)));
}

TEST_CASE("class construction validates membership and pointedness") {
    Polyhedron v = quadrant();
    CHECK_THROWS_AS(mrh_make(Polyhedron::box(v2(0, 0), v2(1, 1)), v, v), InputError);
    Polyhedron line = Polyhedron::cone_from_rays({v2(1, 0), v2(-1, 0)}, 2);
    Polyhedron member = over_cone({v2(0, 0)}, line);
    CHECK_THROWS_AS(mrh_make(member, member, line), InputError);  // not pointed
}

TEST_CASE("equivalence relation on pairs") {
    Polyhedron v = quadrant();
    RandomSets rng(61);
    // [A, V] ~ [A+B, B] for any B in C_V.
    for (int i = 0; i < 10; ++i) {
        Polyhedron a = rng.cv_member(v), b = rng.cv_member(v);
        CHECK(mrh_equivalent(mrh_make(a, v, v), mrh_make(minkowski_sum(a, b), b, v)));
    }
    // Translation one way is not the translation the other way.
    Polyhedron right = over_cone({v2(1, 0)}, v);
    CHECK(!mrh_equivalent(mrh_make(right, v, v), mrh_make(v, right, v)));
    // [V,V] ~ [(0,0)+V, V+{0}].
    CHECK(mrh_equivalent(mrh_make(v, v, v),
                         mrh_make(over_cone({v2(0, 0)}, v),
                                  minkowski_sum(v, Polyhedron::point(v2(0, 0))), v)));
}

TEST_CASE("addition of classes") {
    Polyhedron v = quadrant();
    RandomSets rng(67);
    Polyhedron a = rng.cv_member(v), b = rng.cv_member(v);
    // j is additive.
    CHECK(mrh_equivalent(mrh_add(embed_j(a, v), embed_j(b, v)),
                         embed_j(minkowski_sum(a, b), v)));
    // Neutral element.
    MrhClass x = mrh_make(a, b, v);
    CHECK(mrh_equivalent(mrh_add(x, mrh_make(v, v, v)), x));
    // [(1,0)+V, V] + [V, (2,0)+V] ~ [(1,0)+V, (2,0)+V].
    Polyhedron r1 = over_cone({v2(1, 0)}, v), r2 = over_cone({v2(2, 0)}, v);
    CHECK(mrh_equivalent(mrh_add(mrh_make(r1, v, v), mrh_make(v, r2, v)),
                         mrh_make(r1, r2, v)));
}

TEST_CASE("scalar multiplication of classes") {
    Polyhedron v = quadrant();
    RandomSets rng(71);
    MrhClass x = mrh_make(rng.cv_member(v), rng.cv_member(v), v);
    // (-1)[A,B] = [B,A].
    MrhClass neg = mrh_scale(Rational(-1), x);
    CHECK(neg.pos == x.neg);
    CHECK(neg.neg == x.pos);
    // 0 x ~ [V,V].
    CHECK(mrh_equivalent(mrh_scale(Rational(0), x), mrh_make(v, v, v)));
    // 2 [(1,0)+V, V] ~ [(2,0)+V, V].
    CHECK(mrh_equivalent(mrh_scale(Rational(2), mrh_make(over_cone({v2(1, 0)}, v), v, v)),
                         mrh_make(over_cone({v2(2, 0)}, v), v, v)));
}

TEST_CASE("embedding is injective on canonical forms") {
    Polyhedron v = quadrant();
    CHECK(mrh_equivalent(embed_j(v, v), mrh_make(v, v, v)));
    RandomSets rng(73);
    for (int i = 0; i < 20; ++i) {
        Polyhedron a = rng.cv_member(v), b = rng.cv_member(v);
        CHECK(mrh_equivalent(embed_j(a, v), embed_j(b, v)) == (a == b));
    }
    // Translations add up.
    CHECK(mrh_equivalent(mrh_add(embed_j(over_cone({v2(1, 1)}, v), v),
                                 embed_j(over_cone({v2(2, 2)}, v), v)),
                         embed_j(over_cone({v2(3, 3)}, v), v)));
}

TEST_CASE("cancellation inside C_V") {
    Polyhedron v = quadrant();
    Polyhedron a = over_cone({v2(1, 0)}, v);
    Polyhedron b = Polyhedron::make(
        Polyhedron::box(v2(0, 0), v2(1, 1)).vertices(), v.rays(), 2);
    CvCancelReport rep = cancel_in_CV(a, b, a, v);
    CHECK(rep.premise);
    CHECK(rep.conclusion);
    CHECK(rep.b_limit_evidence.converged);

    // A strictly right of C: no premise, no claim.
    CvCancelReport rep2 = cancel_in_CV(over_cone({v2(1, 0)}, v), v, over_cone({v2(2, 0)}, v), v);
    CHECK(!rep2.premise);

    CHECK_THROWS_AS(cancel_in_CV(Polyhedron::box(v2(0, 0), v2(1, 1)), v, v, v), InputError);
}

TEST_CASE("random C_V triples never violate cancellation") {
    Polyhedron v = quadrant();
    RandomSets rng(79);
    int premise_true = 0;
    for (int i = 0; i < 60; ++i) {
        Polyhedron a = rng.cv_member(v), b = rng.cv_member(v);
        Mat everts = rng.polytope(2).vertices();
        everts.push_back(zero_vec(2));
        Polyhedron c = i % 2 == 0 ? minkowski_sum(a, Polyhedron::make(everts, v.rays(), 2))
                                  : rng.cv_member(v);
        CvCancelReport rep = cancel_in_CV(a, b, c, v);
        if (rep.premise) {
            ++premise_true;
            CHECK(rep.conclusion);
        }
    }
    CHECK(premise_true >= 30);
}

TEST_CASE("powers of one half contract to the cone") {
    Polyhedron v = quadrant();
    Polyhedron a = over_cone({v2(4, 4)}, v);
    PowersReport rep = powers_of_half_limit(a, v, {1, 2, 4, 8, 16});
    REQUIRE(rep.gaps.size() == 5);
    CHECK(rep.gaps[0] == Rational(2));
    CHECK(rep.gaps[1] == Rational(1));
    CHECK(rep.gaps[2] == Rational(1, 4));
    CHECK(rep.gaps[3] == Rational(4) * Rational::pow2(-8));
    CHECK(rep.gaps[4] == Rational(4) * Rational::pow2(-16));
    CHECK(rep.converged);

    PowersReport zero = powers_of_half_limit(v, v, {1, 2, 4});
    for (const Rational& g : zero.gaps) CHECK(g == Rational(0));
    CHECK(zero.converged);

    // Over the trivial cone the box is its own C_V member.
    Polyhedron origin = Polyhedron::point(v2(0, 0));
    Polyhedron big = Polyhedron::box(v2(0, 0), v2(8, 8));
    PowersReport rb = powers_of_half_limit(big, origin, {1, 2, 4, 8, 16});
    for (std::size_t i = 0; i < rb.schedule.size(); ++i) {
        CHECK(rb.gaps[i] == Rational(8) * Rational::pow2(-rb.schedule[i]));
    }
}

TEST_CASE("limit check") {
    Polyhedron v = quadrant();
    Polyhedron a = over_cone({v2(4, 4)}, v);
    std::vector<Polyhedron> constant(6, a);
    CHECK(limit_check(constant, a));

    std::vector<Polyhedron> halving;
    for (int n = 1; n <= 24; ++n) halving.push_back(scale(Rational::pow2(-n), a, v));
    CHECK(limit_check(halving, v));

    std::vector<Polyhedron> drifting;
    for (int n = 1; n <= 6; ++n) drifting.push_back(over_cone({v2(n, 0)}, v));
    CHECK(!limit_check(drifting, v));
}

TEST_CASE("well-definedness of the vector operations") {
    RandomSets rng(83);
    for (const Polyhedron& v : {quadrant_cone(), wedge_cone()}) {
        for (int i = 0; i < 15; ++i) {
            MrhClass x = mrh_make(rng.cv_member(v), rng.cv_member(v), v);
            MrhClass y = mrh_make(rng.cv_member(v), rng.cv_member(v), v);
            Polyhedron e = rng.cv_member(v), f = rng.cv_member(v);
            MrhClass x2 = mrh_make(minkowski_sum(x.pos, e), minkowski_sum(x.neg, e), v);
            MrhClass y2 = mrh_make(minkowski_sum(y.pos, f), minkowski_sum(y.neg, f), v);
            REQUIRE(mrh_equivalent(x, x2));
            REQUIRE(mrh_equivalent(y, y2));
            CHECK(mrh_equivalent(mrh_add(x, y), mrh_add(x2, y2)));
            CHECK(mrh_equivalent(mrh_scale(Rational(-3, 2), x),
                                 mrh_scale(Rational(-3, 2), x2)));
        }
    }
}

TEST_CASE("cone mismatch is an input error") {
    Polyhedron v = quadrant(), w = wedge_cone();
    MrhClass x = mrh_make(v, v, v);
    MrhClass y = mrh_make(w, w, w);
    CHECK_THROWS_AS(mrh_add(x, y), InputError);
    CHECK_THROWS_AS(mrh_equivalent(x, y), InputError);
}
