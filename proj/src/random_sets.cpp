#include "convexsg/random_sets.hpp"

namespace convexsg {

std::uint64_t RandomSets::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int RandomSets::range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Polyhedron RandomSets::polytope(int dim) {
    int nv = range(1, 6);
    Mat verts;
    for (int i = 0; i < nv; ++i) {
        Vec v(static_cast<std::size_t>(dim));
        for (auto& x : v) x = coordinate();
        verts.push_back(std::move(v));
    }
    return Polyhedron::make(std::move(verts), {}, dim);
}

Polyhedron RandomSets::polyhedron(int dim) {
    Polyhedron p = polytope(dim);
    int nr = range(0, 3);
    Mat rays;
    for (int i = 0; i < nr; ++i) {
        Vec r(static_cast<std::size_t>(dim));
        for (auto& x : r) x = coordinate();
        rays.push_back(std::move(r));
    }
    return Polyhedron::make(p.vertices(), std::move(rays), dim);
}

Polyhedron RandomSets::polyhedron_pointed(int dim) {
    Polyhedron p = polytope(dim);
    int nr = range(0, 3);
    Mat rays;
    for (int i = 0; i < nr; ++i) {
        Vec r(static_cast<std::size_t>(dim));
        for (auto& x : r) x = Rational(range(0, 5));
        rays.push_back(std::move(r));
    }
    return Polyhedron::make(p.vertices(), std::move(rays), dim);
}

Polyhedron RandomSets::cv_member(const Polyhedron& v) {
    Polyhedron p = polytope(v.dim());
    return Polyhedron::make(p.vertices(), v.rays(), v.dim());
}

Polyhedron RandomSets::cv0_member(const Polyhedron& v) {
    // Half the time the recession cone is exactly V, otherwise it grows by
    // one extra ray.
    Polyhedron p = polytope(v.dim());
    Mat rays = v.rays();
    if (range(0, 1) == 1) {
        Vec r(static_cast<std::size_t>(v.dim()));
        for (auto& x : r) x = coordinate();
        if (!is_zero_vec(r)) rays.push_back(std::move(r));
    }
    return Polyhedron::make(p.vertices(), std::move(rays), v.dim());
}

Polyhedron RandomSets::polyhedron_with_recc_inside(const Polyhedron& w) {
    Polyhedron p = polytope(w.dim());
    Mat rays;
    int nr = range(0, 3);
    for (int i = 0; i < nr && !w.rays().empty(); ++i) {
        // Nonnegative integer combination of w's generators.
        Vec r = zero_vec(w.dim());
        for (const Vec& g : w.rays()) r = add(r, scaled(Rational(range(0, 2)), g));
        if (!is_zero_vec(r)) rays.push_back(std::move(r));
    }
    return Polyhedron::make(p.vertices(), std::move(rays), w.dim());
}

}  // namespace convexsg
