#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convexsg/polyhedron.hpp"

namespace convexsg {

// An instance of the ordered semigroup with a convergence operator
// (S, +, dyadic scaling, <=, lim). The limit operator is a budgeted decision
// procedure: "does this probe sequence converge to the candidate?".
template <typename I>
concept SemigroupInstance =
    requires(const I& inst, const typename I::Element& a, const typename I::Element& b,
             const Rational& q, const std::vector<typename I::Element>& seq) {
        { inst.add(a, b) } -> std::same_as<typename I::Element>;
        { inst.dyadic_scale(q, a) } -> std::same_as<typename I::Element>;
        { inst.leq(a, b) } -> std::same_as<bool>;
        { inst.zero() } -> std::same_as<typename I::Element>;
        { inst.converges(seq, a) } -> std::same_as<bool>;
        { inst.describe(a) } -> std::same_as<std::string>;
        { inst.name() } -> std::same_as<std::string>;
    };

template <typename El>
struct SampleSequence {
    std::vector<El> prefix;
    El limit;
};

template <typename El>
struct SampleBank {
    std::vector<El> elements;
    std::vector<Rational> dyadics;
    std::vector<SampleSequence<El>> sequences;
};

struct AxiomCheck {
    std::string axiom;
    bool passed = true;
    std::string witness;                  // violating tuple, human-readable
    std::vector<std::size_t> indices;     // replayable tuple coordinates
};

struct AxiomReport {
    std::string instance;
    std::vector<AxiomCheck> checks;

    bool all_passed() const {
        for (const AxiomCheck& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const AxiomCheck& check(const std::string& axiom) const {
        for (const AxiomCheck& c : checks)
            if (c.axiom == axiom) return c;
        throw InputError("unknown axiom " + axiom);
    }
};

namespace sgdetail {

template <SemigroupInstance I>
bool eq(const I& inst, const typename I::Element& a, const typename I::Element& b) {
    return inst.leq(a, b) && inst.leq(b, a);
}

// Evaluates one axiom on one tuple; `indices` points into the bank. Returns
// true when the tuple satisfies the axiom.
template <SemigroupInstance I>
bool eval_axiom(const I& inst, const SampleBank<typename I::Element>& bank, int axiom,
                const std::vector<std::size_t>& ix) {
    const auto& el = bank.elements;
    const auto& dy = bank.dyadics;
    const auto& sq = bank.sequences;
    switch (axiom) {
        case 1:  // a+(b+c) = (a+b)+c
            return eq(inst, inst.add(el[ix[0]], inst.add(el[ix[1]], el[ix[2]])),
                      inst.add(inst.add(el[ix[0]], el[ix[1]]), el[ix[2]]));
        case 2:  // a+b = b+a
            return eq(inst, inst.add(el[ix[0]], el[ix[1]]), inst.add(el[ix[1]], el[ix[0]]));
        case 3:  // a+0 = a
            return eq(inst, inst.add(el[ix[0]], inst.zero()), el[ix[0]]);
        case 4:  // a<=b implies a+c <= b+c
            return !inst.leq(el[ix[0]], el[ix[1]]) ||
                   inst.leq(inst.add(el[ix[0]], el[ix[2]]), inst.add(el[ix[1]], el[ix[2]]));
        case 5:  // 1*a = a
            return eq(inst, inst.dyadic_scale(Rational(1), el[ix[0]]), el[ix[0]]);
        case 6:  // a<=b implies qa <= qb
            return !inst.leq(el[ix[1]], el[ix[2]]) ||
                   inst.leq(inst.dyadic_scale(dy[ix[0]], el[ix[1]]),
                            inst.dyadic_scale(dy[ix[0]], el[ix[2]]));
        case 7:  // p(q a) = (pq) a
            return eq(inst, inst.dyadic_scale(dy[ix[0]], inst.dyadic_scale(dy[ix[1]], el[ix[2]])),
                      inst.dyadic_scale(dy[ix[0]] * dy[ix[1]], el[ix[2]]));
        case 8:  // q(a+b) = qa + qb
            return eq(inst,
                      inst.dyadic_scale(dy[ix[0]], inst.add(el[ix[1]], el[ix[2]])),
                      inst.add(inst.dyadic_scale(dy[ix[0]], el[ix[1]]),
                               inst.dyadic_scale(dy[ix[0]], el[ix[2]])));
        case 9:  // (p+q)a <= pa + qa
            return inst.leq(inst.dyadic_scale(dy[ix[0]] + dy[ix[1]], el[ix[2]]),
                            inst.add(inst.dyadic_scale(dy[ix[0]], el[ix[2]]),
                                     inst.dyadic_scale(dy[ix[1]], el[ix[2]])));
        case 10: {  // a_n <= b_n termwise forces lim a <= lim b
            const auto& sa = sq[ix[0]];
            const auto& sb = sq[ix[1]];
            std::size_t n = std::min(sa.prefix.size(), sb.prefix.size());
            for (std::size_t t = 0; t < n; ++t) {
                if (!inst.leq(sa.prefix[t], sb.prefix[t])) return true;  // premise fails
            }
            return inst.leq(sa.limit, sb.limit);
        }
        case 11: {  // lim(a_n + b) = a + b
            const auto& sa = sq[ix[0]];
            std::vector<typename I::Element> shifted;
            shifted.reserve(sa.prefix.size());
            for (const auto& t : sa.prefix) shifted.push_back(inst.add(t, el[ix[1]]));
            return inst.converges(shifted, inst.add(sa.limit, el[ix[1]]));
        }
        default:
            throw InputError("axiom index out of range");
    }
}

// Violating tuple rendered with element values; the leading coordinates of
// S6-S9 tuples are dyadic scalars, those of S10/S11 are sequence numbers.
template <SemigroupInstance I>
std::string witness_str(const I& inst, const SampleBank<typename I::Element>& bank, int axiom,
                        const std::vector<std::size_t>& ix) {
    auto el = [&](std::size_t i) { return inst.describe(bank.elements[i]); };
    auto dy = [&](std::size_t i) { return bank.dyadics[i].str(); };
    auto sq = [&](std::size_t i) { return "seq#" + std::to_string(i); };
    switch (axiom) {
        case 1:
        case 4:
            return "(" + el(ix[0]) + ", " + el(ix[1]) + ", " + el(ix[2]) + ")";
        case 2:
            return "(" + el(ix[0]) + ", " + el(ix[1]) + ")";
        case 3:
        case 5:
            return "(" + el(ix[0]) + ")";
        case 6:
        case 8:
            return "(" + dy(ix[0]) + ", " + el(ix[1]) + ", " + el(ix[2]) + ")";
        case 7:
        case 9:
            return "(" + dy(ix[0]) + ", " + dy(ix[1]) + ", " + el(ix[2]) + ")";
        case 10:
            return "(" + sq(ix[0]) + ", " + sq(ix[1]) + ")";
        case 11:
            return "(" + sq(ix[0]) + ", " + el(ix[1]) + ")";
        default:
            return "";
    }
}

}  // namespace sgdetail

// Evaluates the quantified statement of every axiom over all sample tuples.
// Sampled, not a proof: a pass means no sampled counterexample.
template <SemigroupInstance I>
AxiomReport check_axioms(const I& inst, const SampleBank<typename I::Element>& bank) {
    if (bank.elements.empty()) throw InputError("axiom harness needs sample elements");
    AxiomReport report;
    report.instance = inst.name();

    auto run = [&](int axiom, const std::vector<std::vector<std::size_t>>& tuples) {
        AxiomCheck chk;
        chk.axiom = "S" + std::to_string(axiom);
        for (const auto& ix : tuples) {
            if (!sgdetail::eval_axiom(inst, bank, axiom, ix)) {
                chk.passed = false;
                chk.indices = ix;
                chk.witness = sgdetail::witness_str(inst, bank, axiom, ix);
                break;
            }
        }
        report.checks.push_back(std::move(chk));
    };

    const std::size_t ne = bank.elements.size();
    const std::size_t nd = bank.dyadics.size();
    const std::size_t ns = bank.sequences.size();
    auto cube = [](std::size_t a, std::size_t b, std::size_t c) {
        std::vector<std::vector<std::size_t>> t;
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j)
                for (std::size_t k = 0; k < c; ++k) t.push_back({i, j, k});
        return t;
    };
    auto square = [](std::size_t a, std::size_t b) {
        std::vector<std::vector<std::size_t>> t;
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j) t.push_back({i, j});
        return t;
    };
    auto line = [](std::size_t a) {
        std::vector<std::vector<std::size_t>> t;
        for (std::size_t i = 0; i < a; ++i) t.push_back({i});
        return t;
    };

    run(1, cube(ne, ne, ne));
    run(2, square(ne, ne));
    run(3, line(ne));
    run(4, cube(ne, ne, ne));
    run(5, line(ne));
    run(6, cube(nd, ne, ne));
    run(7, cube(nd, nd, ne));
    run(8, cube(nd, ne, ne));
    run(9, cube(nd, nd, ne));
    run(10, square(ns, ns));
    run(11, square(ns, ne));
    return report;
}

// Re-evaluates a reported violation; returns true when the violation is
// reproduced (the tuple still fails).
template <SemigroupInstance I>
bool replay_axiom_failure(const I& inst, const SampleBank<typename I::Element>& bank,
                          const AxiomCheck& chk) {
    int axiom = std::stoi(chk.axiom.substr(1));
    return !sgdetail::eval_axiom(inst, bank, axiom, chk.indices);
}

// lim 2^-n a = 0 within the probe budget.
template <SemigroupInstance I>
bool is_bounded_element(const I& inst, const typename I::Element& a,
                        const std::vector<int>& probe_schedule) {
    std::vector<typename I::Element> prefix;
    prefix.reserve(probe_schedule.size());
    for (int n : probe_schedule) prefix.push_back(inst.dyadic_scale(Rational::pow2(-n), a));
    return inst.converges(prefix, inst.zero());
}

// (p+q)a = pa + qa over the sampled dyadic pairs.
template <SemigroupInstance I>
bool is_convex_element(const I& inst, const typename I::Element& a,
                       const std::vector<std::pair<Rational, Rational>>& dyadic_pairs) {
    for (const auto& [p, q] : dyadic_pairs) {
        if (!sgdetail::eq(inst, inst.dyadic_scale(p + q, a),
                          inst.add(inst.dyadic_scale(p, a), inst.dyadic_scale(q, a))))
            return false;
    }
    return true;
}

inline const std::vector<int>& default_probe_schedule() {
    static const std::vector<int> k = {1, 2, 4, 8, 16};
    return k;
}

template <typename El>
struct CancellationCertificate {
    enum class Verdict { PremiseViolated, Concluded, Inconclusive };

    bool premise = false;
    std::vector<int> levels;
    std::vector<bool> level_verdicts;  // a + 2^-k b <= 2^-k b + c per level
    bool b_bounded = false;
    std::optional<El> limit_element;   // lim 2^-n b when boundedness was confirmed
    Verdict final_verdict = Verdict::Inconclusive;
    bool direct_leq = false;           // cross-check of a <= c when concluded

    bool all_levels_hold() const {
        for (bool v : level_verdicts)
            if (!v) return false;
        return true;
    }
};

// The telescoping engine: certifies a <= c from a+b <= b+c by probing the
// inequality a + 2^-k b <= 2^-k b + c along the schedule and confirming that
// b is bounded. Never concludes without the boundedness evidence.
template <SemigroupInstance I>
CancellationCertificate<typename I::Element> cancel_order(
    const I& inst, const typename I::Element& a, const typename I::Element& b,
    const typename I::Element& c, const std::vector<int>& probe_schedule) {
    using Cert = CancellationCertificate<typename I::Element>;
    Cert cert;
    cert.premise = inst.leq(inst.add(a, b), inst.add(b, c));
    if (!cert.premise) {
        cert.final_verdict = Cert::Verdict::PremiseViolated;
        return cert;
    }
    for (int k : probe_schedule) {
        auto bk = inst.dyadic_scale(Rational::pow2(-k), b);
        cert.levels.push_back(k);
        cert.level_verdicts.push_back(inst.leq(inst.add(a, bk), inst.add(bk, c)));
    }
    cert.b_bounded = is_bounded_element(inst, b, default_probe_schedule());
    if (cert.b_bounded) cert.limit_element = inst.zero();
    if (cert.b_bounded && cert.all_levels_hold()) {
        cert.final_verdict = Cert::Verdict::Concluded;
        cert.direct_leq = inst.leq(a, c);
    } else {
        cert.final_verdict = Cert::Verdict::Inconclusive;
    }
    return cert;
}

}  // namespace convexsg
