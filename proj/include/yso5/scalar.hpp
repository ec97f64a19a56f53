#pragma once

#include <string>
#include <string_view>

#include "yso5/rational.hpp"

namespace yso5 {

// Exact Gaussian rational re + im·i.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : re_(v) {}
    Scalar(long long v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar frac(long long p, long long q) { return Scalar(Rational(p, q)); }
    // Accepts the canonical dump format ("p/q", "p/q+r/s i") and a few relaxed
    // forms: integers, "i", "-i", "r/s i".
    static Scalar parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inverse() const;
    Scalar operator-() const { return Scalar(-re_, -im_); }

    // this += a * b
    void add_mul(const Scalar& a, const Scalar& b);

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(a.re_ + b.re_, a.im_ + b.im_); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(a.re_ - b.re_, a.im_ - b.im_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical form: "p/q" when real, otherwise "p/q+r/s i" or "p/q-r/s i".
    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

// Integer power of a scalar (negative exponents invert).
Scalar pow(const Scalar& s, int e);

}  // namespace yso5
