#pragma once

#include <string>
#include <vector>

#include "convexsg/rational.hpp"

namespace convexsg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Rational& s, const Vec& a);
Vec negated(const Vec& a);
bool is_zero_vec(const Vec& a);
Vec zero_vec(int dim);

// Lexicographic order; used everywhere a canonical sorted representation is
// required.
bool lex_less(const Vec& a, const Vec& b);

// Scales to coprime integer coordinates, preserving direction. Zero stays
// zero.
Vec primitive(const Vec& a);
// primitive() plus sign flip so the first nonzero coordinate is positive.
// Only for vectors whose sign is not geometrically meaningful (lineality
// directions, equality rows).
Vec primitive_signed(const Vec& a);

std::string vec_str(const Vec& a);

// Reduced row echelon form of the row space; zero rows dropped, each row
// scaled to primitive integers with positive leading coordinate. Canonical
// for the span.
Mat rref(Mat rows);

// Matrix of the orthogonal projection onto the complement of span(basis).
// basis rows must be linearly independent (e.g. output of rref).
Mat projector_onto_complement(const Mat& basis, int dim);

Vec mat_apply(const Mat& m, const Vec& x);

}  // namespace convexsg
