#include "convexsg/instances.hpp"

#include <algorithm>

namespace convexsg {
namespace {

void require_dyadic_scalar(const Rational& q) {
    if (q.sign() < 0 || !q.is_dyadic())
        throw InputError("scaling factor must be a nonnegative dyadic rational");
}

// Shared budgeted convergence rule: all probe distances defined and
// non-increasing, final one within tol * (first + 1).
bool gap_convergence(const std::vector<GapValue>& gaps, const Rational& tol) {
    if (gaps.empty()) return false;
    for (const GapValue& g : gaps)
        if (!g.finite) return false;
    for (std::size_t i = 1; i < gaps.size(); ++i)
        if (gaps[i].value > gaps[i - 1].value) return false;
    return gaps.back().value <= tol * (gaps.front().value + Rational(1));
}

}  // namespace

ExtDyadic ExtDyadic::of(Rational r) {
    if (r.sign() < 0 || !r.is_dyadic())
        throw InputError("carrier holds nonnegative dyadic rationals only");
    return ExtDyadic{false, std::move(r)};
}

ExtDyadic DyadicInstance::add(const Element& a, const Element& b) const {
    if (a.inf || b.inf) return Element::infinity();
    return Element{false, a.value + b.value};
}

ExtDyadic DyadicInstance::dyadic_scale(const Rational& q, const Element& a) const {
    require_dyadic_scalar(q);
    if (q.is_zero()) return zero();  // 0 * a = 0 for every a, including infinity
    if (a.inf) return Element::infinity();
    return Element{false, q * a.value};
}

bool DyadicInstance::leq(const Element& a, const Element& b) const {
    if (b.inf) return true;
    if (a.inf) return false;
    return a.value <= b.value;
}

bool DyadicInstance::converges(const std::vector<Element>& prefix,
                               const Element& candidate) const {
    std::vector<GapValue> gaps;
    gaps.reserve(prefix.size());
    for (const Element& e : prefix) {
        if (e.inf != candidate.inf) {
            gaps.push_back(GapValue::infinity());
        } else if (e.inf) {
            gaps.push_back(GapValue::of(Rational(0)));
        } else {
            gaps.push_back(GapValue::of((e.value - candidate.value).abs()));
        }
    }
    return gap_convergence(gaps, tol_);
}

ExtDyadic BrokenDyadicInstance::add(const Element& a, const Element& b) const {
    if (a.inf || b.inf) return Element::infinity();
    return Element{false, (a.value - b.value).abs()};
}

ExtDyadic BrokenDyadicInstance::dyadic_scale(const Rational& q, const Element& a) const {
    return DyadicInstance().dyadic_scale(q, a);
}

bool BrokenDyadicInstance::leq(const Element& a, const Element& b) const {
    return DyadicInstance().leq(a, b);
}

bool BrokenDyadicInstance::converges(const std::vector<Element>& prefix,
                                     const Element& candidate) const {
    return DyadicInstance().converges(prefix, candidate);
}

FiniteSubsetInstance::Element FiniteSubsetInstance::make_set(std::vector<ExtDyadic> xs) {
    if (xs.empty()) throw InputError("finite-subset elements are nonempty");
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

FiniteSubsetInstance::Element FiniteSubsetInstance::add(const Element& a,
                                                        const Element& b) const {
    DyadicInstance scalar;
    std::vector<ExtDyadic> out;
    out.reserve(a.size() * b.size());
    for (const ExtDyadic& x : a)
        for (const ExtDyadic& y : b) out.push_back(scalar.add(x, y));
    return make_set(std::move(out));
}

FiniteSubsetInstance::Element FiniteSubsetInstance::dyadic_scale(const Rational& q,
                                                                 const Element& a) const {
    require_dyadic_scalar(q);
    if (q.is_zero()) return zero();  // 0 * A = {0}
    DyadicInstance scalar;
    std::vector<ExtDyadic> out;
    out.reserve(a.size());
    for (const ExtDyadic& x : a) out.push_back(scalar.dyadic_scale(q, x));
    return make_set(std::move(out));
}

bool FiniteSubsetInstance::leq(const Element& a, const Element& b) const {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool FiniteSubsetInstance::converges(const std::vector<Element>& prefix,
                                     const Element& candidate) const {
    // Only eventually-constant sequences are recognized; the ambient topology
    // on finite subsets is left unspecified otherwise.
    if (prefix.empty()) return false;
    for (std::size_t i = prefix.size() / 2; i < prefix.size(); ++i) {
        if (!(prefix[i] == candidate)) return false;
    }
    return true;
}

std::string FiniteSubsetInstance::describe(const Element& a) const {
    std::string s = "{";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].str();
    }
    return s + "}";
}

PolyhedralConeInstance::PolyhedralConeInstance(Polyhedron cone, Rational tol)
    : cone_(std::move(cone)), tol_(std::move(tol)) {
    if (!cone_.is_cone()) throw InputError("instance requires a cone as neutral element");
}

bool PolyhedralConeInstance::member(const Polyhedron& a) const {
    return subset(cone_, recession_cone(a));
}

Polyhedron PolyhedralConeInstance::dyadic_scale(const Rational& q, const Element& a) const {
    require_dyadic_scalar(q);
    return scale(q, a, cone_);
}

bool PolyhedralConeInstance::converges(const std::vector<Element>& prefix,
                                       const Element& candidate) const {
    std::vector<GapValue> gaps;
    gaps.reserve(prefix.size());
    for (const Element& e : prefix) gaps.push_back(hausdorff_gap(e, candidate));
    return gap_convergence(gaps, tol_);
}

SampleBank<ExtDyadic> dyadic_bank() {
    SampleBank<ExtDyadic> bank;
    bank.elements = {ExtDyadic::of(Rational(0)), ExtDyadic::of(Rational(1)),
                     ExtDyadic::of(Rational(1, 2)), ExtDyadic::of(Rational(3, 4)),
                     ExtDyadic::of(Rational(2)), ExtDyadic::infinity()};
    bank.dyadics = {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(3, 4)};

    SampleSequence<ExtDyadic> halving;
    for (int n = 1; n <= 14; ++n) halving.prefix.push_back(ExtDyadic::of(Rational(5) * Rational::pow2(-n)));
    halving.limit = ExtDyadic::of(Rational(0));
    SampleSequence<ExtDyadic> shifted;
    for (int n = 1; n <= 14; ++n) shifted.prefix.push_back(ExtDyadic::of(Rational(1) + Rational::pow2(-n)));
    shifted.limit = ExtDyadic::of(Rational(1));
    SampleSequence<ExtDyadic> constant{std::vector<ExtDyadic>(6, ExtDyadic::of(Rational(3))),
                                       ExtDyadic::of(Rational(3))};
    SampleSequence<ExtDyadic> top{std::vector<ExtDyadic>(6, ExtDyadic::infinity()),
                                  ExtDyadic::infinity()};
    bank.sequences = {halving, shifted, constant, top};
    return bank;
}

SampleBank<ExtDyadic> broken_bank() {
    SampleBank<ExtDyadic> bank = dyadic_bank();
    // Finite samples only; the broken addition is a self-test target, not a
    // model of the extended carrier.
    bank.elements.pop_back();
    bank.sequences.pop_back();
    return bank;
}

SampleBank<FiniteSubsetInstance::Element> finite_subset_bank() {
    using El = FiniteSubsetInstance::Element;
    auto fin = [](long long n, long long d = 1) { return ExtDyadic::of(Rational(n, d)); };
    SampleBank<El> bank;
    bank.elements = {
        FiniteSubsetInstance::make_set({fin(0)}),
        FiniteSubsetInstance::make_set({fin(1)}),
        FiniteSubsetInstance::make_set({fin(1), ExtDyadic::infinity()}),
        FiniteSubsetInstance::make_set({fin(1, 2), fin(3)}),
        FiniteSubsetInstance::make_set({ExtDyadic::infinity()}),
        FiniteSubsetInstance::make_set({fin(0), fin(2)}),
    };
    bank.dyadics = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
    for (const El& e : {bank.elements[0], bank.elements[2], bank.elements[5]}) {
        SampleSequence<El> s{std::vector<El>(6, e), e};
        bank.sequences.push_back(std::move(s));
    }
    // Eventually constant with a different head.
    SampleSequence<FiniteSubsetInstance::Element> ec;
    ec.prefix = std::vector<El>(6, bank.elements[1]);
    ec.prefix[0] = bank.elements[3];
    ec.limit = bank.elements[1];
    bank.sequences.push_back(std::move(ec));
    return bank;
}

SampleBank<Polyhedron> polyhedral_bank(const PolyhedralConeInstance& inst) {
    const Polyhedron& v = inst.cone();
    const int d = v.dim();
    SampleBank<Polyhedron> bank;

    Vec ones(static_cast<std::size_t>(d), Rational(1));
    Vec twos(static_cast<std::size_t>(d), Rational(2));
    Polyhedron shifted = Polyhedron::make({ones}, v.rays(), d);
    Polyhedron unit_box_sum = Polyhedron::make(Polyhedron::box(zero_vec(d), ones).vertices(),
                                               v.rays(), d);
    Mat tri = {zero_vec(d), ones, twos};
    Polyhedron hull_sum = Polyhedron::make(tri, v.rays(), d);
    bank.elements = {v, shifted, unit_box_sum, hull_sum};
    // One member whose recession cone strictly contains V.
    Mat extra_rays = v.rays();
    Vec e0 = zero_vec(d);
    e0[0] = -1;
    extra_rays.push_back(e0);
    bank.elements.push_back(Polyhedron::make({zero_vec(d)}, std::move(extra_rays), d));

    bank.dyadics = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};

    SampleSequence<Polyhedron> halving{{}, v};
    for (int n = 1; n <= 14; ++n)
        halving.prefix.push_back(scale(Rational::pow2(-n), shifted, v));
    SampleSequence<Polyhedron> constant{std::vector<Polyhedron>(6, unit_box_sum), unit_box_sum};
    bank.sequences = {halving, constant};
    return bank;
}

std::vector<std::pair<Rational, Rational>> default_dyadic_pairs() {
    return {{Rational(1), Rational(1)},
            {Rational(1, 2), Rational(1, 2)},
            {Rational(3, 4), Rational(1, 4)},
            {Rational(2), Rational(1)},
            {Rational(0), Rational(1)},
            {Rational(1, 4), Rational(2)}};
}

}  // namespace convexsg
