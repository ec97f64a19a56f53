#include "yso5/rational.hpp"

#include <limits>
#include <numeric>

#include "yso5/error.hpp"

namespace yso5 {

namespace {

using u128 = unsigned __int128;

constexpr int64_t kMin = std::numeric_limits<int64_t>::min();
constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

uint64_t uabs(int64_t v) { return v < 0 ? uint64_t(0) - uint64_t(v) : uint64_t(v); }

u128 uabs128(__int128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 v) { return v >= kMin && v <= kMax; }

mpz_class mpz_from(__int128 v) {
    u128 m = uabs128(v);
    mpz_class hi(static_cast<unsigned long>(uint64_t(m >> 64)));
    mpz_class lo(static_cast<unsigned long>(uint64_t(m)));
    mpz_class r = (hi << 64) + lo;
    return v < 0 ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_big(q); }

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    u128 g = gcd128(uabs128(n), u128(d));
    if (g != 1) {
        n /= __int128(g);
        d /= __int128(g);
    }
    if (fits(n) && fits(d)) {
        Rational r;
        r.num_ = int64_t(n);
        r.den_ = int64_t(d);
        return r;
    }
    mpq_class q(mpz_from(n), mpz_from(d));
    Rational r;
    r.num_ = 0;
    r.den_ = 1;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::from_big(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    Rational r;
    if (n.fits_slong_p() && d.fits_slong_p()) {
        r.num_ = n.get_si();
        r.den_ = d.get_si();
        return r;
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string den = s.substr(slash + 1);
        if (den.empty() || den.find_first_not_of("0") == std::string::npos)
            throw ParseError("rational literal with zero or missing denominator: " + s);
        if (den[0] == '-' || den[0] == '+') throw ParseError("signed denominator in rational literal: " + s);
    }
    std::string digits = s[0] == '+' ? s.substr(1) : s;
    mpq_class q;
    if (q.set_str(digits, 10) != 0) throw ParseError("malformed rational literal: " + s);
    return from_big(q);
}

bool Rational::is_integer() const {
    if (!big_) return den_ == 1;
    return big_->get_den() == 1;
}

int Rational::sign() const {
    if (!big_) return (num_ > 0) - (num_ < 0);
    return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from(num_), mpz_from(den_));
}

std::string Rational::num_string() const {
    if (!big_) return std::to_string(num_);
    return big_->get_num().get_str();
}

std::string Rational::den_string() const {
    if (!big_) return std::to_string(den_);
    return big_->get_den().get_str();
}

std::string Rational::to_string() const { return num_string() + "/" + den_string(); }

Rational Rational::operator-() const {
    if (!big_) {
        if (num_ == kMin) return from_wide(-__int128(num_), den_);
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return from_big(-*big_);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    if (!big_) return from_wide(den_, num_);
    return from_big(1 / *big_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0) return b;
        if (b.num_ == 0) return a;
        if (a.den_ == b.den_) {
            int64_t n;
            if (!__builtin_add_overflow(a.num_, b.num_, &n)) {
                Rational r;
                if (n == 0) return r;
                uint64_t g = a.den_ == 1 ? 1 : std::gcd(uabs(n), uint64_t(a.den_));
                r.num_ = n / int64_t(g);
                r.den_ = a.den_ / int64_t(g);
                return r;
            }
        }
        return Rational::from_wide(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                                   __int128(a.den_) * b.den_);
    }
    return Rational::from_big(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (b.num_ == 0) return a;
        if (a.den_ == b.den_) {
            int64_t n;
            if (!__builtin_sub_overflow(a.num_, b.num_, &n)) {
                Rational r;
                if (n == 0) return r;
                uint64_t g = a.den_ == 1 ? 1 : std::gcd(uabs(n), uint64_t(a.den_));
                r.num_ = n / int64_t(g);
                r.den_ = a.den_ / int64_t(g);
                return r;
            }
        }
        return Rational::from_wide(__int128(a.num_) * b.den_ - __int128(b.num_) * a.den_,
                                   __int128(a.den_) * b.den_);
    }
    return Rational::from_big(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        if (a.den_ == 1 && b.den_ == 1) {
            int64_t n;
            if (!__builtin_mul_overflow(a.num_, b.num_, &n)) {
                Rational r;
                r.num_ = n;
                return r;
            }
        }
        int64_t g1 = int64_t(std::gcd(uabs(a.num_), uint64_t(b.den_)));
        int64_t g2 = int64_t(std::gcd(uabs(b.num_), uint64_t(a.den_)));
        __int128 n = __int128(a.num_ / g1) * (b.num_ / g2);
        __int128 d = __int128(a.den_ / g2) * (b.den_ / g1);
        if (fits(n) && fits(d)) {
            Rational r;
            r.num_ = int64_t(n);
            r.den_ = int64_t(d);
            return r;
        }
        return Rational::from_wide(n, d);
    }
    return Rational::from_big(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

}  // namespace yso5
