#include "convexsg/batch.hpp"

namespace convexsg {
namespace {

bool translate_subset(const Polyhedron& a, const Polyhedron& b, const Vec& x, bool rays_ok) {
    if (!rays_ok) return false;
    for (const Vec& v : b.vertices()) {
        if (!contains_point(a, add(v, x))) return false;
    }
    return true;
}

// For a cone anchored at the origin, point membership is ray membership.
bool rays_inside(const Polyhedron& a, const Polyhedron& b) {
    Polyhedron ra = recession_cone(a);
    for (const Vec& r : b.rays()) {
        if (!contains_point(ra, r)) return false;
    }
    return true;
}

}  // namespace

Mat grid_points(const Vec& lo, const Vec& hi, const Rational& step) {
    const std::size_t d = lo.size();
    if (hi.size() != d) throw InputError("grid corner dimension mismatch");
    if (step.sign() <= 0) throw InputError("grid step must be positive");
    std::vector<long long> counts(d);
    Mat axes(d);
    for (std::size_t k = 0; k < d; ++k) {
        Rational x = lo[k];
        while (x <= hi[k]) {
            axes[k].push_back(x);
            x += step;
        }
        if (axes[k].empty()) return {};
        counts[k] = static_cast<long long>(axes[k].size());
    }
    long long total = 1;
    for (long long c : counts) total *= c;
    Mat pts;
    pts.reserve(static_cast<std::size_t>(total));
    for (long long idx = 0; idx < total; ++idx) {
        Vec p(d);
        long long rem = idx;
        for (std::size_t k = d; k-- > 0;) {
            p[k] = axes[k][static_cast<std::size_t>(rem % counts[k])];
            rem /= counts[k];
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

std::vector<std::uint8_t> contains_many_serial(const Polyhedron& p, const Mat& points) {
    std::vector<std::uint8_t> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = contains_point(p, points[i]);
    return out;
}

std::vector<std::uint8_t> contains_many(const Polyhedron& p, const Mat& points) {
    std::vector<std::uint8_t> out(points.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = contains_point(p, points[i]);
    return out;
}

std::vector<std::uint8_t> erosion_oracle_serial(const Polyhedron& a, const Polyhedron& b,
                                                const Mat& points) {
    bool rays_ok = rays_inside(a, b);
    std::vector<std::uint8_t> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        out[i] = translate_subset(a, b, points[i], rays_ok);
    return out;
}

std::vector<std::uint8_t> erosion_oracle(const Polyhedron& a, const Polyhedron& b,
                                         const Mat& points) {
    bool rays_ok = rays_inside(a, b);
    std::vector<std::uint8_t> out(points.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < points.size(); ++i)
        out[i] = translate_subset(a, b, points[i], rays_ok);
    return out;
}

}  // namespace convexsg
