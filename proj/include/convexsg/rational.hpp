#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "convexsg/error.hpp"

namespace convexsg {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar p/q with arbitrary-precision integers. Always kept in
// canonical form: q > 0 and gcd(|p|, q) = 1. Every arithmetic operation is
// exact; there is no floating point anywhere in the geometry path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    // True when the denominator is a power of two (the scalar domain of the
    // abstract semigroup axioms).
    bool is_dyadic() const;

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // 2^k for any integer k, including negative.
    static Rational pow2(int k);

    // Accepts "p", "-p", "p/q" with optional sign; exact, no floats.
    static std::optional<Rational> parse(std::string_view s);

    // "p" when integral, otherwise "p/q".
    std::string str() const;

private:
    boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace convexsg
