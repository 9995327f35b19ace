#pragma once

#include <cstdint>

#include "convexsg/polyhedron.hpp"

namespace convexsg {

// Deterministic generator for the randomized suites: integer coordinates in
// [-5, 5], 1-6 vertices, 0-3 rays. Identical seeds give identical streams on
// every platform (no std distributions involved).
class RandomSets {
public:
    explicit RandomSets(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next();
    int range(int lo, int hi);  // inclusive bounds
    Rational coordinate() { return Rational(range(-5, 5)); }

    Polyhedron polytope(int dim);
    // Vertices plus 0-3 unrestricted rays; may contain lines.
    Polyhedron polyhedron(int dim);
    // Rays drawn from the nonnegative orthant (a fixed pointed cone).
    Polyhedron polyhedron_pointed(int dim);
    // Random member of C_V: a random polytope pushed along the cone V.
    Polyhedron cv_member(const Polyhedron& v);
    // Random member of the wider family { A : V subset recc A }.
    Polyhedron cv0_member(const Polyhedron& v);
    // Rays drawn from cone(w.rays): a set whose recession cone sits inside w.
    Polyhedron polyhedron_with_recc_inside(const Polyhedron& w);

private:
    std::uint64_t state_;
};

}  // namespace convexsg
