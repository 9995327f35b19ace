#pragma once

#include "convexsg/semigroup.hpp"

namespace convexsg {

// Element of the dyadic carrier with a top element: Q2+ joined with infinity.
struct ExtDyadic {
    bool inf = false;
    Rational value;

    static ExtDyadic infinity() { return ExtDyadic{true, Rational(0)}; }
    static ExtDyadic of(Rational r);
    friend bool operator==(const ExtDyadic& a, const ExtDyadic& b) {
        return a.inf == b.inf && (a.inf || a.value == b.value);
    }
    friend bool operator<(const ExtDyadic& a, const ExtDyadic& b) {
        if (a.inf != b.inf) return b.inf;
        return !a.inf && a.value < b.value;
    }
    std::string str() const { return inf ? "inf" : value.str(); }
};

// Nonnegative dyadics with infinity under the natural order. Every element
// is convex; only infinity is unbounded.
class DyadicInstance {
public:
    using Element = ExtDyadic;

    explicit DyadicInstance(Rational tol = Rational::pow2(-10)) : tol_(std::move(tol)) {}

    Element add(const Element& a, const Element& b) const;
    Element dyadic_scale(const Rational& q, const Element& a) const;
    bool leq(const Element& a, const Element& b) const;
    Element zero() const { return {}; }
    bool converges(const std::vector<Element>& prefix, const Element& candidate) const;
    std::string describe(const Element& a) const { return a.str(); }
    std::string name() const { return "dyadic"; }

private:
    Rational tol_;
};

// Deliberately broken variant: addition is the absolute difference, which is
// not monotone, so (S4) fails. Used as a harness self-test.
class BrokenDyadicInstance {
public:
    using Element = ExtDyadic;

    Element add(const Element& a, const Element& b) const;
    Element dyadic_scale(const Rational& q, const Element& a) const;
    bool leq(const Element& a, const Element& b) const;
    Element zero() const { return {}; }
    bool converges(const std::vector<Element>& prefix, const Element& candidate) const;
    std::string describe(const Element& a) const { return a.str(); }
    std::string name() const { return "broken-nonmonotone-add"; }
};

// Nonempty finite subsets of the dyadic-with-infinity carrier, ordered by
// inclusion, with elementwise addition. The limit oracle only recognizes
// eventually-constant sequences.
class FiniteSubsetInstance {
public:
    using Element = std::vector<ExtDyadic>;  // sorted, unique

    static Element make_set(std::vector<ExtDyadic> xs);

    Element add(const Element& a, const Element& b) const;
    Element dyadic_scale(const Rational& q, const Element& a) const;
    bool leq(const Element& a, const Element& b) const;  // inclusion
    Element zero() const { return {ExtDyadic{}}; }
    bool converges(const std::vector<Element>& prefix, const Element& candidate) const;
    std::string describe(const Element& a) const;
    std::string name() const { return "finite-subsets"; }
};

// Polyhedra whose recession cone contains a fixed cone V, ordered by
// inclusion, with Minkowski addition and the gap-based limit oracle.
class PolyhedralConeInstance {
public:
    using Element = Polyhedron;

    explicit PolyhedralConeInstance(Polyhedron cone, Rational tol = Rational::pow2(-10));

    bool member(const Polyhedron& a) const;  // V subset recc A

    Element add(const Element& a, const Element& b) const { return minkowski_sum(a, b); }
    Element dyadic_scale(const Rational& q, const Element& a) const;
    bool leq(const Element& a, const Element& b) const { return subset(a, b); }
    Element zero() const { return cone_; }
    bool converges(const std::vector<Element>& prefix, const Element& candidate) const;
    std::string describe(const Element& a) const { return a.str(); }
    std::string name() const { return "polyhedra"; }

    const Polyhedron& cone() const { return cone_; }
    const Rational& tol() const { return tol_; }

private:
    Polyhedron cone_;
    Rational tol_;
};

// Shipped sample banks for the axiom harness.
SampleBank<ExtDyadic> dyadic_bank();
SampleBank<ExtDyadic> broken_bank();
SampleBank<FiniteSubsetInstance::Element> finite_subset_bank();
SampleBank<Polyhedron> polyhedral_bank(const PolyhedralConeInstance& inst);

std::vector<std::pair<Rational, Rational>> default_dyadic_pairs();

}  // namespace convexsg
