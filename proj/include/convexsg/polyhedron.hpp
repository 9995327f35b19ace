#pragma once

#include <optional>
#include <string>
#include <vector>

#include "convexsg/conversion.hpp"
#include "convexsg/lp.hpp"

namespace convexsg {

// Nonempty closed convex polyhedron conv(vertices) + cone(rays) in canonical
// form: generators are minimal, rays primitive, everything sorted, and the
// vertex list lives in the orthogonal complement of the lineality space.
// Structural equality therefore coincides with set equality.
class Polyhedron {
public:
    // Canonicalizes arbitrary generators. Throws InputError when the vertex
    // list is empty or dimensions disagree.
    static Polyhedron make(Mat vertices, Mat rays, int dim);

    static Polyhedron point(Vec p);
    static Polyhedron box(const Vec& lo, const Vec& hi);
    static Polyhedron cone_from_rays(Mat rays, int dim);

    int dim() const { return dim_; }
    const Mat& vertices() const { return vertices_; }
    const Mat& rays() const { return rays_; }
    bool is_polytope() const { return rays_.empty(); }
    bool is_cone() const;  // single vertex at the origin

    friend bool operator==(const Polyhedron& a, const Polyhedron& b) = default;

    std::string str() const;

private:
    Polyhedron(int dim, Mat vertices, Mat rays)
        : dim_(dim), vertices_(std::move(vertices)), rays_(std::move(rays)) {}

    int dim_ = 0;
    Mat vertices_;
    Mat rays_;
};

// Minimal generator pair for conv(vertices) + cone(rays): every vertex
// expressible through the others (plus rays) and every ray inside the cone
// of the others is dropped; rays are primitive; vertices are reduced modulo
// the lineality space; output sorted lexicographically.
std::pair<Mat, Mat> remove_redundant_generators(Mat vertices, Mat rays, int dim);

// Nonnegative gap or the +infinity marker (recession cones differ).
struct GapValue {
    bool finite = true;
    Rational value;

    static GapValue infinity() { return GapValue{false, Rational(0)}; }
    static GapValue of(Rational r) { return GapValue{true, std::move(r)}; }
    friend bool operator==(const GapValue& a, const GapValue& b) = default;
    std::string str() const { return finite ? value.str() : "inf"; }
};

// Minkowski sum; on polyhedra the algebraic sum is already closed.
Polyhedron minkowski_sum(const Polyhedron& a, const Polyhedron& b);

// lambda * A for lambda > 0; for lambda = 0 returns zero_value, which must be
// a cone (the neutral element the caller works over). Negative lambda is an
// input error.
Polyhedron scale(const Rational& lambda, const Polyhedron& a, const Polyhedron& zero_value);

// Support value sup { direction . x : x in A }; nullopt encodes +infinity.
std::optional<Rational> support_function(const Polyhedron& a, const Vec& direction);

bool contains_point(const Polyhedron& a, const Vec& x);
bool subset(const Polyhedron& a, const Polyhedron& b);

// Minkowski difference { x : x + B subset A }; nullopt encodes the empty set.
std::optional<Polyhedron> erode(const Polyhedron& a, const Polyhedron& b);

// cone(A.rays) anchored at the origin; equals erode(A, A).
Polyhedron recession_cone(const Polyhedron& a);

// K cap -K = {0}? Requires a cone input.
bool is_pointed(const Polyhedron& k);

struct NarrownessReport {
    bool is_narrow = true;
    Mat direction_generators;  // canonical rays of the recession cone
};
// In finite dimension every polyhedron is narrow; the report carries the
// generators of its direction cone.
NarrownessReport narrowness_report(const Polyhedron& a);

// Least r >= 0 with A subset B + r*Box and B subset A + r*Box, where Box is
// the l-infinity unit ball; +infinity when the recession cones differ.
GapValue hausdorff_gap(const Polyhedron& a, const Polyhedron& b);

// l-infinity distance from a point to a polyhedron.
Rational linf_distance(const Vec& p, const Polyhedron& a);

struct CancelReport {
    bool premise = false;     // A+B subset B+C
    bool conclusion = false;  // A subset C
    bool recc_b_in_recc_c = false;
    bool recc_c_pointed = false;
    // The cancellation theorem guarantees premise => conclusion when both
    // hypothesis flags hold.
    bool hypotheses() const { return recc_b_in_recc_c && recc_c_pointed; }
};
CancelReport order_cancel(const Polyhedron& a, const Polyhedron& b, const Polyhedron& c);

}  // namespace convexsg
