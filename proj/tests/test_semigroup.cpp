#include <doctest.h>

#include "convexsg/instances.hpp"
#include "convexsg/random_sets.hpp"
#include "convexsg/suites.hpp"

using namespace convexsg;

namespace {

ExtDyadic fin(long long n, long long d = 1) { return ExtDyadic::of(Rational(n, d)); }

Polyhedron trivial_cone() { return Polyhedron::point({Rational(0), Rational(0)}); }

}  // namespace

TEST_CASE("all axioms pass on the dyadic instance") {
    AxiomReport rep = check_axioms(DyadicInstance(), dyadic_bank());
    CHECK(rep.checks.size() == 11);
    for (const AxiomCheck& c : rep.checks) {
        INFO(c.axiom << " witness " << c.witness);
        CHECK(c.passed);
    }
}

TEST_CASE("all axioms pass on the finite-subsets instance") {
    AxiomReport rep = check_axioms(FiniteSubsetInstance(), finite_subset_bank());
    CHECK(rep.all_passed());
}

TEST_CASE("all axioms pass on the polyhedral instance") {
    PolyhedralConeInstance inst(quadrant_cone());
    AxiomReport rep = check_axioms(inst, polyhedral_bank(inst));
    for (const AxiomCheck& c : rep.checks) {
        INFO(c.axiom << " witness " << c.witness);
        CHECK(c.passed);
    }
}

TEST_CASE("broken instance fails S4 with a replayable witness") {
    BrokenDyadicInstance broken;
    SampleBank<ExtDyadic> bank = broken_bank();
    AxiomReport rep = check_axioms(broken, bank);
    const AxiomCheck& s4 = rep.check("S4");
    REQUIRE(!s4.passed);
    CHECK(!s4.indices.empty());
    // Harness soundness: the reported tuple still violates the axiom.
    CHECK(replay_axiom_failure(broken, bank, s4));
}

TEST_CASE("boundedness classifier") {
    DyadicInstance dy;
    CHECK(is_bounded_element(dy, fin(5), default_probe_schedule()));
    CHECK(!is_bounded_element(dy, ExtDyadic::infinity(), default_probe_schedule()));

    PolyhedralConeInstance poly(quadrant_cone());
    Polyhedron shifted =
        Polyhedron::make({{Rational(1), Rational(1)}}, quadrant_cone().rays(), 2);
    CHECK(is_bounded_element(poly, shifted, default_probe_schedule()));
}

TEST_CASE("boundedness in the polyhedral instance is exactly finite gap") {
    Polyhedron v = quadrant_cone();
    PolyhedralConeInstance inst(v);
    RandomSets rng(41);
    for (int i = 0; i < 100; ++i) {
        Polyhedron a = rng.cv0_member(v);
        bool bounded = is_bounded_element(inst, a, default_probe_schedule());
        bool finite_gap = hausdorff_gap(a, v).finite;
        CHECK(bounded == finite_gap);
    }
}

TEST_CASE("convexity classifier") {
    FiniteSubsetInstance fs;
    CHECK(is_convex_element(fs, FiniteSubsetInstance::make_set({fin(3)}),
                            default_dyadic_pairs()));
    // Sets with at most one number other than infinity are convex: the cross
    // terms against infinity all collapse.
    CHECK(is_convex_element(fs, FiniteSubsetInstance::make_set({fin(1), ExtDyadic::infinity()}),
                            default_dyadic_pairs()));
    // (1+1){1,2} = {2,4} but {1,2}+{1,2} = {2,3,4}.
    auto mixed = FiniteSubsetInstance::make_set({fin(1), fin(2)});
    CHECK(!is_convex_element(fs, mixed, {{Rational(1), Rational(1)}}));
    CHECK(fs.dyadic_scale(Rational(2), mixed) ==
          FiniteSubsetInstance::make_set({fin(2), fin(4)}));
    CHECK(fs.add(mixed, mixed) == FiniteSubsetInstance::make_set({fin(2), fin(3), fin(4)}));

    // Every element of the dyadic carrier is convex, including the top one.
    DyadicInstance dy;
    for (const ExtDyadic& e : dyadic_bank().elements) {
        CHECK(is_convex_element(dy, e, default_dyadic_pairs()));
    }

    PolyhedralConeInstance poly(quadrant_cone());
    RandomSets rng(43);
    for (int i = 0; i < 10; ++i) {
        CHECK(is_convex_element(poly, rng.cv_member(quadrant_cone()), default_dyadic_pairs()));
    }
}

TEST_CASE("telescoping engine on the polyhedral instance") {
    // Over the trivial cone every polyhedron is a member and every polytope
    // is bounded.
    PolyhedralConeInstance inst(trivial_cone());
    Polyhedron a = Polyhedron::make({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}},
                                    {}, 2);
    Polyhedron b = Polyhedron::box({Rational(0), Rational(0)}, {Rational(1), Rational(1)});
    Polyhedron c = quadrant_cone();
    auto cert = cancel_order(inst, a, b, c, default_probe_schedule());
    CHECK(cert.premise);
    CHECK(cert.all_levels_hold());
    CHECK(cert.b_bounded);
    REQUIRE(cert.limit_element);
    CHECK(*cert.limit_element == trivial_cone());
    CHECK(cert.final_verdict == CancellationCertificate<Polyhedron>::Verdict::Concluded);
    CHECK(cert.direct_leq);
}

TEST_CASE("telescoping engine with a genuine common recession cone") {
    Polyhedron v = quadrant_cone();
    PolyhedralConeInstance inst(v);
    RandomSets rng(47);
    Polyhedron a = rng.cv_member(v);
    Polyhedron b = rng.cv_member(v);
    Mat everts = rng.polytope(2).vertices();
    everts.push_back(zero_vec(2));
    Polyhedron c = minkowski_sum(a, Polyhedron::make(std::move(everts), v.rays(), 2));
    auto cert = cancel_order(inst, a, b, c, {1, 2, 4, 8, 16});
    CHECK(cert.premise);
    CHECK(cert.all_levels_hold());
    CHECK(cert.b_bounded);
    CHECK(cert.final_verdict == CancellationCertificate<Polyhedron>::Verdict::Concluded);
    CHECK(cert.direct_leq == subset(a, c));
    CHECK(cert.direct_leq);
}

TEST_CASE("dyadic cancellation: 1 + 5 <= 5 + 2 gives 1 <= 2") {
    DyadicInstance dy;
    auto cert = cancel_order(dy, fin(1), fin(5), fin(2), default_probe_schedule());
    CHECK(cert.premise);
    CHECK(cert.all_levels_hold());
    CHECK(cert.b_bounded);
    CHECK(cert.final_verdict == CancellationCertificate<ExtDyadic>::Verdict::Concluded);
    CHECK(cert.direct_leq);
}

TEST_CASE("unbounded cancellation declines to conclude") {
    // 1 + inf <= inf + 0 holds, but canceling inf would claim 1 <= 0.
    DyadicInstance dy;
    auto cert = cancel_order(dy, fin(1), ExtDyadic::infinity(), fin(0),
                             default_probe_schedule());
    CHECK(cert.premise);
    CHECK(cert.all_levels_hold());  // every level reads inf <= inf
    CHECK(!cert.b_bounded);
    CHECK(cert.final_verdict == CancellationCertificate<ExtDyadic>::Verdict::Inconclusive);
    CHECK(!dy.leq(fin(1), fin(0)));  // and indeed the conclusion is false
}

TEST_CASE("premise violation is reported as such") {
    DyadicInstance dy;
    auto cert = cancel_order(dy, fin(5), fin(1), fin(2), default_probe_schedule());
    CHECK(!cert.premise);
    CHECK(cert.final_verdict == CancellationCertificate<ExtDyadic>::Verdict::PremiseViolated);
}

TEST_CASE("engine never overclaims against direct comparison") {
    Polyhedron v = quadrant_cone();
    PolyhedralConeInstance inst(v);
    RandomSets rng(53);
    for (int i = 0; i < 10; ++i) {
        Polyhedron a = rng.cv_member(v), b = rng.cv_member(v), c = rng.cv_member(v);
        auto cert = cancel_order(inst, a, b, c, {1, 2, 4});
        if (cert.final_verdict == CancellationCertificate<Polyhedron>::Verdict::Concluded) {
            CHECK(cert.direct_leq == subset(a, c));
        }
    }
}

TEST_CASE("scaling rejects non-dyadic or negative factors") {
    DyadicInstance dy;
    CHECK_THROWS_AS(dy.dyadic_scale(Rational(1, 3), fin(1)), InputError);
    CHECK_THROWS_AS(dy.dyadic_scale(Rational(-1), fin(1)), InputError);
}
