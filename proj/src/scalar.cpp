#include "yso5/scalar.hpp"

#include <cctype>

#include "yso5/error.hpp"

namespace yso5 {

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.im_.is_zero()) {
        if (b.im_.is_zero()) return Scalar(a.re_ * b.re_);
        return Scalar(a.re_ * b.re_, a.re_ * b.im_);
    }
    if (b.im_.is_zero()) return Scalar(a.re_ * b.re_, a.im_ * b.re_);
    if (a.re_.is_zero() && b.re_.is_zero()) return Scalar(-(a.im_ * b.im_));
    return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (!o.re_.is_zero()) re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (!o.re_.is_zero()) re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) {
        re_ += a.re_ * b.re_;
        return;
    }
    *this += a * b;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero scalar");
    if (im_.is_zero()) return Scalar(re_.inverse());
    Rational n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
}

std::string Scalar::to_string() const {
    std::string s = re_.to_string();
    if (im_.is_zero()) return s;
    if (im_.sign() > 0)
        s += "+" + im_.to_string();
    else
        s += "-" + (-im_).to_string();
    return s + " i";
}

namespace {

// Parses an optionally signed rational "p" or "p/q" starting at pos.
Rational read_rational(std::string_view t, size_t& pos) {
    size_t start = pos;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected digits in scalar literal: " + std::string(t));
    if (pos < t.size() && t[pos] == '/') {
        ++pos;
        size_t d = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == d) throw ParseError("expected denominator in scalar literal: " + std::string(t));
    }
    return Rational::parse(t.substr(start, pos - start));
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    std::string_view t(compact);
    if (t.empty()) throw ParseError("empty scalar literal");
    if (t == "i" || t == "+i") return Scalar::i();
    if (t == "-i") return -Scalar::i();
    size_t pos = 0;
    Rational first = read_rational(t, pos);
    if (pos == t.size()) return Scalar(first);
    if (t[pos] == 'i' && pos + 1 == t.size()) return Scalar(Rational(), first);
    Rational second;
    if (t[pos] == '+' || t[pos] == '-') {
        if (pos + 2 == t.size() && t[pos + 1] == 'i') {
            second = t[pos] == '+' ? Rational(1) : Rational(-1);
        } else {
            second = read_rational(t, pos);
            if (pos + 1 != t.size() || t[pos] != 'i') throw ParseError("malformed scalar literal: " + compact);
        }
        return Scalar(first, second);
    }
    throw ParseError("malformed scalar literal: " + compact);
}

Scalar pow(const Scalar& s, int e) {
    if (e < 0) return pow(s.inverse(), -e);
    Scalar r(1);
    for (int k = 0; k < e; ++k) r *= s;
    return r;
}

}  // namespace yso5
