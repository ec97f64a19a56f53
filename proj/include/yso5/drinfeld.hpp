#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yso5/check.hpp"
#include "yso5/rtt_engine.hpp"
#include "yso5/so5_rep.hpp"

namespace yso5 {

// a_{λμναβγ} = (1/4!) Σ_{σ,τ,ρ} c_{λασ} c_{μβτ} c_{νγρ} c_{στρ}, stored sparsely.
struct ATensor {
    std::map<std::array<int, 6>, Scalar> entries;

    size_t nnz() const { return entries.size(); }
    Scalar at(int l, int m, int n, int a, int b, int g) const;
    // Nonzero (α,β,γ) → value for fixed (λ,μ,ν).
    std::vector<std::pair<std::array<int, 3>, Scalar>> slice(int l, int m, int n) const;
};

struct YangianPair {
    AdjointOps level1;  // I_λ
    AdjointOps level2;  // J_λ
    Scalar h{1};
};

ATensor compute_a_tensor(const StructureTensor& c);

SparseOp triple_product(const SparseOp& x1, const SparseOp& x2, const SparseOp& x3);
Matrix triple_product(const Matrix& x1, const Matrix& x2, const Matrix& x3);

using Quadruple = std::array<int, 4>;

// Adjoint basis positions of the generating subset {I12, I23, I34, I45}.
const std::array<int, 4>& generating_subset();
// All 256 quadruples over the generating subset.
std::vector<Quadruple> default_quadruples();

// Linear relations for both families, the cubic relation for all λ<μ<ν, and the
// quartic relation over `quads`.
std::vector<CheckResult> check_drinfeld(const YangianPair& yp, const StructureTensor& c, const ATensor& a,
                                        const std::string& suite, const std::vector<Quadruple>& quads);

struct SerreReport {
    std::vector<CheckResult> results;
    bool lhs_zero = false;
    bool rhs_zero = false;
    std::optional<Scalar> lambda;  // LHS = λ·RHS with RHS at the given h
};

// [J23, J15] against (i/4!) h² ({I13,I42,I45} + {I12,I45,I34} - {I14,I42,I35} - {I14,I34,I25}),
// plus the Cartan–Weyl form of the same relation.
SerreReport check_serre(const YangianPair& yp, const std::string& suite);

// Cartan–Weyl tables cw-level1, cw-level2 and cw-cubic are evaluated on the pair;
// rtt-level-n and rtt-tilde need the Lax representation.
std::vector<CheckResult> check_cw_tables(const YangianPair& yp, const std::string& table, const LaxRep* rep_extra,
                                         const std::string& suite, const std::vector<int>& n_values = {1, 2});

// Inverse Cartan–Weyl naming on one level of Lax components, composed with the
// torus rescaling that removes √2.
AdjointOps phi_map(const ComponentSet& cs);
// I from level 1, J from level 2, h = 1.
YangianPair lax_yangian_pair(const LaxRep& rep);

}  // namespace yso5
