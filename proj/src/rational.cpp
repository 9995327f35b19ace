#include "convexsg/rational.hpp"

#include <cctype>
#include <ostream>

namespace convexsg {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw InputError("rational with zero denominator");
    if (den.sign() < 0) {
        v_ = boost::multiprecision::cpp_rational(-num, -den);
    } else {
        v_ = boost::multiprecision::cpp_rational(num, den);
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

bool Rational::is_dyadic() const {
    BigInt d = den();
    return (d & (d - 1)) == 0;
}

Rational Rational::pow2(int k) {
    BigInt p = BigInt(1) << static_cast<unsigned>(k < 0 ? -k : k);
    return k >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

std::optional<Rational> Rational::parse(std::string_view s) {
    auto parse_int = [](std::string_view t) -> std::optional<BigInt> {
        if (t.empty()) return std::nullopt;
        std::size_t i = 0;
        bool neg = false;
        if (t[0] == '+' || t[0] == '-') {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size()) return std::nullopt;
        BigInt v = 0;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return std::nullopt;
            v = v * 10 + (t[i] - '0');
        }
        return neg ? BigInt(-v) : v;
    };

    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(s);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(s.substr(0, slash));
    auto d = parse_int(s.substr(slash + 1));
    if (!n || !d || d->is_zero()) return std::nullopt;
    return Rational(*n, *d);
}

std::string Rational::str() const {
    std::string out = num().str();
    if (!is_integer()) {
        out += '/';
        out += den().str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace convexsg
