#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "yso5/scalar.hpp"

namespace yso5 {

// T^{(level)}_{ab} with aux labels a, b in {2,1,0,-1,-2}.
struct GenSymbol {
    int level = 1;
    int a = 0;
    int b = 0;

    std::string to_string() const;  // "T2[1,-2]"

    // level, then aux row of a, then of b (rows run 2,1,0,-1,-2)
    friend std::strong_ordering operator<=>(const GenSymbol& x, const GenSymbol& y) {
        if (auto c = x.level <=> y.level; c != 0) return c;
        if (auto c = y.a <=> x.a; c != 0) return c;
        return y.b <=> x.b;
    }
    friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
};

using Word = std::vector<GenSymbol>;

std::string word_to_string(const Word& w);

// Element of the free associative algebra over Gaussian rationals.
class FreePoly {
public:
    FreePoly() = default;
    static FreePoly constant(const Scalar& s);
    static FreePoly symbol(const GenSymbol& g);

    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    int max_level() const;

    // Scaled so that the lexicographically smallest word has coefficient 1.
    FreePoly normalized() const;

    FreePoly operator-() const;
    friend FreePoly operator+(const FreePoly& a, const FreePoly& b);
    friend FreePoly operator-(const FreePoly& a, const FreePoly& b);
    friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
    friend FreePoly operator*(const Scalar& s, const FreePoly& p);
    FreePoly& operator+=(const FreePoly& o);
    FreePoly& operator-=(const FreePoly& o);
    friend bool operator==(const FreePoly& a, const FreePoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add_term(const Word& w, const Scalar& c);
    std::map<Word, Scalar> terms_;
};

FreePoly commutator(const FreePoly& a, const FreePoly& b);

// True when a = s·b for some nonzero scalar s.
bool proportional(const FreePoly& a, const FreePoly& b);

}  // namespace yso5
