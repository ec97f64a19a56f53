#include "yso5/free_poly.hpp"

#include <algorithm>

namespace yso5 {

std::string GenSymbol::to_string() const {
    return "T" + std::to_string(level) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k) s += " ";
        s += w[k].to_string();
    }
    return s;
}

FreePoly FreePoly::constant(const Scalar& s) {
    FreePoly p;
    if (!s.is_zero()) p.terms_[Word{}] = s;
    return p;
}

FreePoly FreePoly::symbol(const GenSymbol& g) {
    FreePoly p;
    p.terms_[Word{g}] = Scalar(1);
    return p;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int FreePoly::max_level() const {
    int m = 0;
    for (const auto& [w, c] : terms_)
        for (const auto& g : w) m = std::max(m, g.level);
    return m;
}

FreePoly FreePoly::normalized() const {
    if (terms_.empty()) return *this;
    return terms_.begin()->second.inverse() * *this;
}

FreePoly FreePoly::operator-() const {
    FreePoly p = *this;
    for (auto& [w, c] : p.terms_) c = -c;
    return p;
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreePoly operator+(const FreePoly& a, const FreePoly& b) {
    FreePoly p = a;
    p += b;
    return p;
}

FreePoly operator-(const FreePoly& a, const FreePoly& b) {
    FreePoly p = a;
    p -= b;
    return p;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
    FreePoly p;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            p.add_term(w, ca * cb);
        }
    return p;
}

FreePoly operator*(const Scalar& s, const FreePoly& p) {
    FreePoly r;
    if (s.is_zero()) return r;
    r = p;
    for (auto& [w, c] : r.terms_) c = s * c;
    return r;
}

std::string FreePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.to_string() + ")";
        if (!w.empty()) s += " " + word_to_string(w);
    }
    return s;
}

FreePoly commutator(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }

bool proportional(const FreePoly& a, const FreePoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.normalized() == b.normalized();
}

}  // namespace yso5
