#include "convexsg/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "convexsg/batch.hpp"
#include "convexsg/random_sets.hpp"

namespace convexsg {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point from) {
    return std::chrono::duration<double>(Clock::now() - from).count();
}

// Accumulates every intermediate verdict/value so that determinism checks
// can compare full computation traces, not just final counters.
struct Trace {
    std::string data;
    void add(const std::string& s) {
        data += s;
        data += ';';
    }
    void add(bool b) { add(std::string(b ? "1" : "0")); }
    std::string digest() const { return fnv1a_hex(data); }
};

Polyhedron random_box(RandomSets& rng, int max_side) {
    Vec lo = {Rational(rng.range(-3, 3)), Rational(rng.range(-3, 3))};
    Vec hi = {lo[0] + Rational(rng.range(1, max_side)), lo[1] + Rational(rng.range(1, max_side))};
    return Polyhedron::box(lo, hi);
}

Polyhedron random_small_box(RandomSets& rng) {
    Vec lo = {Rational(rng.range(-2, 2)), Rational(rng.range(-2, 2))};
    Vec hi = {lo[0] + Rational(rng.range(0, 2)), lo[1] + Rational(rng.range(0, 2))};
    return Polyhedron::box(lo, hi);
}

struct ErosionCase {
    Polyhedron a, b;
    Mat grid;
};

ErosionCase make_erosion_case(RandomSets& rng) {
    ErosionCase ec{random_box(rng, 4), random_small_box(rng), {}};
    Vec lo = ec.a.vertices().front(), hi = ec.a.vertices().back();
    for (auto& x : lo) x -= Rational(1);
    for (auto& x : hi) x += Rational(1);
    ec.grid = grid_points(lo, hi, Rational(1, 4));
    return ec;
}

// One erosion-vs-oracle comparison; returns the number of grid mismatches.
int erosion_mismatches(const ErosionCase& ec, Trace* trace) {
    auto eroded = erode(ec.a, ec.b);
    std::vector<std::uint8_t> by_erode =
        eroded ? contains_many(*eroded, ec.grid)
               : std::vector<std::uint8_t>(ec.grid.size(), 0);
    std::vector<std::uint8_t> by_oracle = erosion_oracle(ec.a, ec.b, ec.grid);
    int mismatches = 0;
    for (std::size_t i = 0; i < ec.grid.size(); ++i) {
        if (by_erode[i] != by_oracle[i]) ++mismatches;
        if (trace) trace->add(by_oracle[i] != 0);
    }
    return mismatches;
}

struct CancelTriple {
    Polyhedron a, b, c;
};

// Half of the triples satisfy the premise by construction (C = A + D with
// 0 in D); the rest are free-range with rays of B drawn inside recc C.
CancelTriple make_cancel_triple(RandomSets& rng, int dim, bool engineered) {
    if (engineered) {
        Polyhedron a = rng.polytope(dim);
        Polyhedron b = rng.polytope(dim);
        Mat dverts = rng.polytope(dim).vertices();
        dverts.push_back(zero_vec(dim));
        Polyhedron d = Polyhedron::make(std::move(dverts), {}, dim);
        return {a, b, minkowski_sum(a, d)};
    }
    Polyhedron c = rng.polyhedron_pointed(dim);
    Polyhedron b = rng.polyhedron_with_recc_inside(c);
    Polyhedron a = rng.polytope(dim);
    return {a, b, c};
}

struct MrhLawStats {
    int checks = 0;
    int violations = 0;
};

void check_law(MrhLawStats& st, Trace* trace, bool ok) {
    ++st.checks;
    if (!ok) ++st.violations;
    if (trace) trace->add(ok);
}

MrhLawStats mrh_law_pass(RandomSets& rng, const Polyhedron& v, int cases, Trace* trace) {
    MrhLawStats st;
    const Rational lambdas[] = {Rational(2), Rational(1, 2), Rational(-1), Rational(-3, 2)};
    for (int i = 0; i < cases; ++i) {
        MrhClass x = mrh_make(rng.cv_member(v), rng.cv_member(v), v);
        MrhClass y = mrh_make(rng.cv_member(v), rng.cv_member(v), v);
        MrhClass z = mrh_make(rng.cv_member(v), rng.cv_member(v), v);
        MrhClass zero = mrh_make(v, v, v);

        check_law(st, trace, mrh_equivalent(mrh_add(x, y), mrh_add(y, x)));
        check_law(st, trace,
                  mrh_equivalent(mrh_add(mrh_add(x, y), z), mrh_add(x, mrh_add(y, z))));
        check_law(st, trace, mrh_equivalent(mrh_add(x, zero), x));
        check_law(st, trace, mrh_equivalent(mrh_add(x, mrh_scale(Rational(-1), x)), zero));
        check_law(st, trace, mrh_equivalent(mrh_scale(Rational(1), x), x));

        const Rational& l = lambdas[i % 4];
        check_law(st, trace,
                  mrh_equivalent(mrh_scale(l, mrh_add(x, y)),
                                 mrh_add(mrh_scale(l, x), mrh_scale(l, y))));
        // (l + m) x = l x + m x for scalars of one sign.
        Rational m = l * Rational(1, 2);
        check_law(st, trace,
                  mrh_equivalent(mrh_scale(l + m, x),
                                 mrh_add(mrh_scale(l, x), mrh_scale(m, x))));

        // Well-definedness: shifting both components by a common summand
        // stays in the same class.
        Polyhedron e = rng.cv_member(v);
        MrhClass x2 = mrh_make(minkowski_sum(x.pos, e), minkowski_sum(x.neg, e), v);
        check_law(st, trace, mrh_equivalent(x, x2));
        check_law(st, trace, mrh_equivalent(mrh_add(x2, y), mrh_add(x, y)));
        check_law(st, trace, mrh_equivalent(mrh_scale(l, x2), mrh_scale(l, x)));

        // The embedding is additive and positively homogeneous.
        Polyhedron pa = rng.cv_member(v), pb = rng.cv_member(v);
        check_law(st, trace,
                  mrh_equivalent(embed_j(minkowski_sum(pa, pb), v),
                                 mrh_add(embed_j(pa, v), embed_j(pb, v))));
        check_law(st, trace,
                  mrh_equivalent(embed_j(scale(Rational(2), pa, v), v),
                                 mrh_scale(Rational(2), embed_j(pa, v))));
        // Gap compatibility of the equivalence.
        check_law(st, trace,
                  hausdorff_gap(minkowski_sum(x.pos, x2.neg), minkowski_sum(x.neg, x2.pos)) ==
                      GapValue::of(Rational(0)));
    }
    return st;
}

std::vector<int> consecutive_schedule(int upto) {
    std::vector<int> s;
    for (int i = 0; i <= upto; ++i) s.push_back(i);
    return s;
}

}  // namespace

Polyhedron quadrant_cone() {
    return Polyhedron::cone_from_rays({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
                                      2);
}

Polyhedron wedge_cone() {
    return Polyhedron::cone_from_rays({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}},
                                      2);
}

namespace {

CriterionResult crit_erosion_oracle(std::uint64_t seed) {
    auto t0 = Clock::now();
    RandomSets rng(seed ^ 0x01);
    int mismatches = 0;
    std::size_t points = 0;
    for (int i = 0; i < 100; ++i) {
        ErosionCase ec = make_erosion_case(rng);
        points += ec.grid.size();
        mismatches += erosion_mismatches(ec, nullptr);
    }
    CriterionResult r{1, "erosion oracle equivalence", false, "", 0.0};
    r.seconds = elapsed(t0);
    r.passed = mismatches == 0 && r.seconds < 60.0;
    std::ostringstream os;
    os << "100 box pairs, " << points << " grid verdicts, " << mismatches << " mismatches";
    r.detail = os.str();
    return r;
}

CriterionResult crit_recession_identity(std::uint64_t seed) {
    auto t0 = Clock::now();
    RandomSets rng(seed ^ 0x02);
    std::vector<Polyhedron> cases;
    for (int i = 0; i < 200; ++i) cases.push_back(rng.polyhedron(2 + i % 3));
    std::vector<std::uint8_t> ok(cases.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < cases.size(); ++i) {
        auto eroded = erode(cases[i], cases[i]);
        ok[i] = eroded && *eroded == recession_cone(cases[i]);
    }
    int failures = 0;
    for (auto v : ok) failures += v == 0;
    CriterionResult r{2, "recession cone equals self-erosion", failures == 0, "", elapsed(t0)};
    r.detail = "200 random polyhedra in dims 2-4, " + std::to_string(failures) + " failures";
    return r;
}

CriterionResult crit_cancellation(std::uint64_t seed) {
    auto t0 = Clock::now();
    RandomSets rng(seed ^ 0x03);
    std::vector<CancelTriple> triples;
    for (int i = 0; i < 200; ++i)
        triples.push_back(make_cancel_triple(rng, 2 + i % 3, i % 2 == 0));
    int premise_true = 0, violations = 0, hypothesis_met = 0;
    std::vector<int> outcome(triples.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < triples.size(); ++i) {
        CancelReport rep = order_cancel(triples[i].a, triples[i].b, triples[i].c);
        int code = 0;
        if (rep.hypotheses()) code |= 1;
        if (rep.premise) code |= 2;
        if (rep.premise && rep.hypotheses() && !rep.conclusion) code |= 4;
        outcome[i] = code;
    }
    for (int code : outcome) {
        hypothesis_met += (code & 1) != 0;
        premise_true += (code & 2) != 0;
        violations += (code & 4) != 0;
    }
    CriterionResult r{3, "order cancellation law", violations == 0 && premise_true >= 100, "",
                      elapsed(t0)};
    std::ostringstream os;
    os << "200 triples, hypotheses met " << hypothesis_met << ", premise true " << premise_true
       << ", violations " << violations;
    r.detail = os.str();
    return r;
}

CriterionResult crit_telescoping(std::uint64_t seed) {
    auto t0 = Clock::now();
    RandomSets rng(seed ^ 0x04);
    Polyhedron v = quadrant_cone();
    PolyhedralConeInstance inst(v);
    const std::vector<int> schedule = {1, 2, 4, 8, 16};
    int level_failures = 0, disagreements = 0, concluded = 0;
    for (int i = 0; i < 50; ++i) {
        Polyhedron a = rng.cv_member(v);
        Polyhedron b = rng.cv_member(v);
        Mat everts = rng.polytope(2).vertices();
        everts.push_back(zero_vec(2));
        Polyhedron c = minkowski_sum(a, Polyhedron::make(std::move(everts), v.rays(), 2));
        auto cert = cancel_order(inst, a, b, c, schedule);
        if (!cert.premise || !cert.all_levels_hold()) ++level_failures;
        if (cert.final_verdict ==
            CancellationCertificate<Polyhedron>::Verdict::Concluded) {
            ++concluded;
            if (cert.direct_leq != subset(a, c)) ++disagreements;
            if (!cert.direct_leq) ++disagreements;  // the theorem promises a <= c here
        }
    }
    CriterionResult r{4, "telescoping cancellation engine", false, "", 0.0};
    r.passed = level_failures == 0 && disagreements == 0 && concluded == 50;
    r.seconds = elapsed(t0);
    std::ostringstream os;
    os << "50 premise-satisfying triples, level failures " << level_failures
       << ", verdict disagreements " << disagreements << ", concluded " << concluded;
    r.detail = os.str();
    return r;
}

CriterionResult crit_mrh_laws(std::uint64_t seed) {
    auto t0 = Clock::now();
    RandomSets rng(seed ^ 0x05);
    MrhLawStats st;
    for (const Polyhedron& v : {quadrant_cone(), wedge_cone()}) {
        MrhLawStats part = mrh_law_pass(rng, v, 50, nullptr);
        st.checks += part.checks;
        st.violations += part.violations;
    }
    CriterionResult r{5, "MRH vector-space laws", st.violations == 0, "", elapsed(t0)};
    r.detail = std::to_string(st.checks) + " law instances over two cones, " +
               std::to_string(st.violations) + " violations";
    return r;
}

CriterionResult crit_powers_of_half(std::uint64_t seed) {
    auto t0 = Clock::now();
    RandomSets rng(seed ^ 0x06);
    Polyhedron v = quadrant_cone();
    int failures = 0;
    for (int i = 0; i < 50; ++i) {
        Polyhedron a = rng.cv_member(v);
        PowersReport rep = powers_of_half_limit(a, v, consecutive_schedule(10));
        bool ok = rep.converged;
        for (std::size_t k = 1; k < rep.gaps.size(); ++k) {
            if (rep.gaps[k] * Rational(2) != rep.gaps[k - 1]) ok = false;  // exact halving
        }
        if (!rep.gaps.empty() &&
            rep.gaps.back() > Rational::pow2(-10) * (rep.gaps.front() + Rational(1)))
            ok = false;
        if (!ok) ++failures;
    }
    CriterionResult r{6, "powers-of-half limit", failures == 0, "", elapsed(t0)};
    r.detail = "50 C_V members, gaps halve exactly, " + std::to_string(failures) + " failures";
    return r;
}

CriterionResult crit_axioms(std::uint64_t) {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;

    AxiomReport dy = check_axioms(DyadicInstance(), dyadic_bank());
    AxiomReport fs = check_axioms(FiniteSubsetInstance(), finite_subset_bank());
    PolyhedralConeInstance poly(quadrant_cone());
    AxiomReport ph = check_axioms(poly, polyhedral_bank(poly));
    ok = dy.all_passed() && fs.all_passed() && ph.all_passed();

    BrokenDyadicInstance broken;
    SampleBank<ExtDyadic> bb = broken_bank();
    AxiomReport br = check_axioms(broken, bb);
    const AxiomCheck& s4 = br.check("S4");
    bool broken_detected = !s4.passed && replay_axiom_failure(broken, bb, s4);
    ok = ok && broken_detected;

    CriterionResult r{7, "axiom harness on shipped instances", ok, "", elapsed(t0)};
    r.detail = std::string("dyadic ") + (dy.all_passed() ? "pass" : "FAIL") +
               ", finite-subsets " + (fs.all_passed() ? "pass" : "FAIL") + ", polyhedra " +
               (ph.all_passed() ? "pass" : "FAIL") + ", broken instance S4 " +
               (broken_detected ? ("fails with witness " + s4.witness) : "NOT DETECTED");
    return r;
}

CriterionResult crit_lab_values(std::uint64_t) {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int n : {2, 3, 4, 8}) {
        TruncationReport rep = verify_halfline_emergence(n);
        ok = ok && rep.all_verified();
    }
    TruncationReport nc = verify_nonclosedness_trend({2, 4, 8});
    ok = ok && nc.all_verified();
    for (int n : {1, 2, 3}) {
        TruncationReport cubes = verify_growing_cubes(n);
        ok = ok && cubes.all_verified();
    }
    CriterionResult r{8, "counterexample lab exact values", false, "", 0.0};
    r.seconds = elapsed(t0);
    r.passed = ok && r.seconds < 120.0;
    std::ostringstream os;
    os << "halfline N in {2,3,4,8}, nonclosed N in {2,4,8}, cubes N in {1,2,3}; "
       << (ok ? "all LP-verified" : "verification FAILED");
    r.detail = os.str();
    return r;
}

CriterionResult crit_determinism(std::uint64_t seed) {
    auto t0 = Clock::now();
#ifdef _OPENMP
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    std::string first = property_suite_report(seed, 12).dump(2);
#ifdef _OPENMP
    omp_set_num_threads(std::max(2, saved));
#endif
    std::string second = property_suite_report(seed, 12).dump(2);
#ifdef _OPENMP
    omp_set_num_threads(saved);
#endif
    bool ok = first == second;
    CriterionResult r{9, "deterministic reports", ok, "", elapsed(t0)};
    r.detail = ok ? "same-seed suite reports are byte-identical across thread counts"
                  : "reports differ between runs";
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    return {
        crit_erosion_oracle(seed), crit_recession_identity(seed), crit_cancellation(seed),
        crit_telescoping(seed),    crit_mrh_laws(seed),           crit_powers_of_half(seed),
        crit_axioms(seed),         crit_lab_values(seed),         crit_determinism(seed),
    };
}

Json property_suite_report(std::uint64_t seed, int cases) {
    if (cases <= 0) throw InputError("case count must be positive");
    Trace trace;
    Json suites;

    {
        RandomSets rng(seed ^ 0x11);
        int pairs = std::max(1, cases / 5);
        int mism = 0;
        std::size_t pts = 0;
        for (int i = 0; i < pairs; ++i) {
            ErosionCase ec = make_erosion_case(rng);
            pts += ec.grid.size();
            mism += erosion_mismatches(ec, &trace);
        }
        suites["erosion_oracle"] = {{"pairs", pairs},
                                    {"grid_points", pts},
                                    {"mismatches", mism}};
    }
    {
        RandomSets rng(seed ^ 0x12);
        int failures = 0;
        for (int i = 0; i < cases; ++i) {
            Polyhedron a = rng.polyhedron(2 + i % 3);
            auto eroded = erode(a, a);
            bool ok = eroded && *eroded == recession_cone(a);
            trace.add(ok);
            failures += !ok;
        }
        suites["recession_identity"] = {{"cases", cases}, {"failures", failures}};
    }
    {
        RandomSets rng(seed ^ 0x13);
        int premise_true = 0, violations = 0;
        for (int i = 0; i < cases; ++i) {
            CancelTriple t = make_cancel_triple(rng, 2 + i % 3, i % 2 == 0);
            CancelReport rep = order_cancel(t.a, t.b, t.c);
            trace.add(rep.premise);
            trace.add(rep.conclusion);
            if (rep.premise && rep.hypotheses()) {
                ++premise_true;
                violations += !rep.conclusion;
            }
        }
        suites["cancellation"] = {{"cases", cases},
                                  {"premise_true", premise_true},
                                  {"violations", violations}};
    }
    {
        RandomSets rng(seed ^ 0x14);
        MrhLawStats st = mrh_law_pass(rng, quadrant_cone(), std::max(1, cases / 4), &trace);
        suites["mrh_laws"] = {{"checks", st.checks}, {"violations", st.violations}};
    }
    {
        RandomSets rng(seed ^ 0x15);
        Polyhedron v = quadrant_cone();
        int failures = 0;
        Json sample_gaps = Json::array();
        for (int i = 0; i < cases; ++i) {
            Polyhedron a = rng.cv_member(v);
            PowersReport rep = powers_of_half_limit(a, v, consecutive_schedule(10));
            bool ok = rep.converged;
            for (std::size_t k = 1; k < rep.gaps.size(); ++k)
                if (rep.gaps[k] * Rational(2) != rep.gaps[k - 1]) ok = false;
            failures += !ok;
            trace.add(ok);
            if (i == 0) {
                for (const Rational& g : rep.gaps) sample_gaps.push_back(g.str());
            }
        }
        suites["powers_of_half"] = {{"cases", cases},
                                    {"failures", failures},
                                    {"first_case_gaps", sample_gaps}};
    }

    Json out;
    out["seed"] = std::to_string(seed);
    out["cases"] = cases;
    out["suites"] = suites;
    out["trace"] = trace.digest();
    return out;
}

}  // namespace convexsg
