#pragma once

#include <optional>
#include <string>

#include "yso5/sparse_op.hpp"

namespace yso5 {

// Operator with coefficients in Q(i)[√2], stored as rat + √2·root2. Needed for
// the Cartan–Weyl combinations (I ± iI)/√2; zero iff both parts vanish.
struct SurdOp {
    SparseOp rat;
    SparseOp root2;

    SurdOp() = default;
    explicit SurdOp(size_t dim) : rat(dim), root2(dim) {}
    SurdOp(SparseOp r) : rat(std::move(r)), root2(rat.dim()) {}
    SurdOp(SparseOp r, SparseOp s) : rat(std::move(r)), root2(std::move(s)) {}

    static SurdOp identity(size_t dim) { return SurdOp(SparseOp::identity(dim)); }
    // m / √2 = (√2/2)·m
    static SurdOp over_sqrt2(const SparseOp& m) { return SurdOp(SparseOp(m.dim()), Scalar::frac(1, 2) * m); }

    size_t dim() const { return rat.dim(); }
    bool is_zero() const { return rat.is_zero() && root2.is_zero(); }
    bool has_root2() const { return !root2.is_zero(); }

    // First nonzero entry; `part` is "rational" or "sqrt2".
    struct SurdWitness {
        Witness entry;
        std::string part;
    };
    std::optional<SurdWitness> first_nonzero() const;

    SurdOp operator-() const { return SurdOp(-rat, -root2); }
    friend SurdOp operator+(const SurdOp& a, const SurdOp& b) { return SurdOp(a.rat + b.rat, a.root2 + b.root2); }
    friend SurdOp operator-(const SurdOp& a, const SurdOp& b) { return SurdOp(a.rat - b.rat, a.root2 - b.root2); }
    friend SurdOp operator*(const SurdOp& a, const SurdOp& b);
    friend SurdOp operator*(const Scalar& s, const SurdOp& m) { return SurdOp(s * m.rat, s * m.root2); }
    friend bool operator==(const SurdOp& a, const SurdOp& b) { return a.rat == b.rat && a.root2 == b.root2; }
};

SurdOp commutator(const SurdOp& a, const SurdOp& b);
SurdOp anticommutator(const SurdOp& a, const SurdOp& b);

}  // namespace yso5
