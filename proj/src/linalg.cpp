#include "convexsg/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace convexsg {

Rational dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scaled(const Rational& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Vec negated(const Vec& a) { return scaled(Rational(-1), a); }

bool is_zero_vec(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

Vec zero_vec(int dim) { return Vec(static_cast<std::size_t>(dim)); }

bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

Vec primitive(const Vec& a) {
    BigInt l = 1;
    for (const Rational& x : a) l = boost::multiprecision::lcm(l, x.den());
    BigInt g = 0;
    for (const Rational& x : a) g = boost::multiprecision::gcd(g, BigInt(x.num() * (l / x.den())));
    if (g.is_zero()) return zero_vec(static_cast<int>(a.size()));
    Rational f(l, g);
    return scaled(f, a);
}

Vec primitive_signed(const Vec& a) {
    Vec p = primitive(a);
    for (const Rational& x : p) {
        if (x.is_zero()) continue;
        return x.sign() < 0 ? negated(p) : p;
    }
    return p;
}

std::string vec_str(const Vec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += a[i].str();
    }
    return s + ")";
}

Mat rref(Mat rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = Rational(1) / rows[rank][c];
        rows[rank] = scaled(inv, rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][c].is_zero()) continue;
            rows[i] = sub(rows[i], scaled(rows[i][c], rows[rank]));
        }
        ++rank;
    }
    rows.resize(rank);
    for (Vec& r : rows) r = primitive_signed(r);
    return rows;
}

Mat projector_onto_complement(const Mat& basis, int dim) {
    const std::size_t d = static_cast<std::size_t>(dim);
    Mat p(d, zero_vec(dim));
    for (std::size_t i = 0; i < d; ++i) p[i][i] = 1;
    if (basis.empty()) return p;

    const std::size_t k = basis.size();
    // Gram matrix and its inverse via Gauss-Jordan.
    Mat g(k, Vec(2 * k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) g[i][j] = dot(basis[i], basis[j]);
        g[i][k + i] = 1;
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pivot = c;
        while (pivot < k && g[pivot][c].is_zero()) ++pivot;
        assert(pivot < k && "gram matrix of independent rows is invertible");
        std::swap(g[c], g[pivot]);
        Rational inv = Rational(1) / g[c][c];
        g[c] = scaled(inv, g[c]);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == c || g[i][c].is_zero()) continue;
            g[i] = sub(g[i], scaled(g[i][c], g[c]));
        }
    }
    Mat ginv(k, Vec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) ginv[i][j] = g[i][k + j];

    // P = I - B^T G^{-1} B
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Rational s;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) s += basis[i][r] * ginv[i][j] * basis[j][c];
            p[r][c] -= s;
        }
    }
    return p;
}

Vec mat_apply(const Mat& m, const Vec& x) {
    Vec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
    return r;
}

}  // namespace convexsg
