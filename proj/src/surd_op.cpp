#include "yso5/surd_op.hpp"

namespace yso5 {

std::optional<SurdOp::SurdWitness> SurdOp::first_nonzero() const {
    if (auto w = rat.first_nonzero()) return SurdWitness{*w, "rational"};
    if (auto w = root2.first_nonzero()) return SurdWitness{*w, "sqrt2"};
    return std::nullopt;
}

SurdOp operator*(const SurdOp& a, const SurdOp& b) {
    if (!a.has_root2() && !b.has_root2()) return SurdOp(a.rat * b.rat);
    SparseOp r = a.rat * b.rat + Scalar(2) * (a.root2 * b.root2);
    SparseOp s = a.rat * b.root2 + a.root2 * b.rat;
    return SurdOp(std::move(r), std::move(s));
}

SurdOp commutator(const SurdOp& a, const SurdOp& b) { return a * b - b * a; }

SurdOp anticommutator(const SurdOp& a, const SurdOp& b) { return a * b + b * a; }

}  // namespace yso5
