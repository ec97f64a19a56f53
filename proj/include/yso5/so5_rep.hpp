#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "yso5/check.hpp"
#include "yso5/matrix.hpp"
#include "yso5/sparse_op.hpp"
#include "yso5/surd_op.hpp"

namespace yso5 {

struct CliffordSet {
    std::array<Matrix, 5> gammas;  // gammas[k] is Γ^{k+1}
};

// Antisymmetric pair (a,b), 1 ≤ a < b ≤ 5.
struct AdjointIndex {
    int a;
    int b;
    std::string label() const;  // "I12"
    friend bool operator==(const AdjointIndex&, const AdjointIndex&) = default;
};

// Basis order 12,13,14,15,23,24,25,34,35,45.
const std::array<AdjointIndex, 10>& adjoint_basis();
int adjoint_position(int a, int b);  // requires a < b

// Ten operators in adjoint-basis order, read with antisymmetric extension.
struct AdjointOps {
    std::array<SparseOp, 10> ops;

    size_t dim() const { return ops[0].dim(); }
    // I_ab for any 1 ≤ a,b ≤ 5: I_ba = -I_ab, I_aa = 0.
    SparseOp get(int a, int b) const;
    const SparseOp& operator[](size_t k) const { return ops[k]; }
};

// Which overall sign of i the generator formulas carry. Consistent makes the
// commutators close with +i; Flipped is kept for negative tests.
enum class GeneratorSign { Consistent, Flipped };

struct GeneratorSet {
    size_t rep_dim = 0;
    AdjointOps gens;
};

struct StructureTensor {
    std::array<AdjointIndex, 10> basis_labels;
    // c[l][m][n]: [I_l, I_m] = Σ_n c[l][m][n] I_n
    std::array<std::array<std::array<Scalar, 10>, 10>, 10> c;
};

// Cartan–Weyl view of an adjoint family; every member is exact in Q(i)[√2].
struct CartanWeylSet {
    SurdOp e3, f3, e_plus, e_minus, f_plus, f_minus, u_plus, u_minus, v_plus, v_minus;

    // Names "E3","F3","Ep","Em","Fp","Fm","Up","Um","Vp","Vm".
    const SurdOp& get(std::string_view name) const;
    static const std::array<std::string_view, 10>& names();
};

// Conjugated is the variant consistent with the adjoint commutators; Literal keeps
// the opposite sign of i and fails the level-1 table (negative test).
enum class CwConvention { Conjugated, Literal };

CliffordSet build_clifford();
bool clifford_valid(const CliffordSet& cs);

GeneratorSet build_spinor_generators(const CliffordSet& cs, GeneratorSign sign = GeneratorSign::Consistent,
                                     bool validate = true);
GeneratorSet build_vector_generators(GeneratorSign sign = GeneratorSign::Consistent);

CartanWeylSet to_cartan_weyl(const AdjointOps& g, const Scalar& h, int level,
                             CwConvention conv = CwConvention::Conjugated);

StructureTensor structure_constants(const AdjointOps& g);

// Commutator residual [I_ab, X_cd] - i(δ_bc X_ad + δ_ad X_bc - δ_ac X_bd - δ_bd X_ac).
SparseOp adjoint_residual(const AdjointOps& I, const AdjointOps& X, AdjointIndex p, AdjointIndex q);

// The 45 unordered pairs of distinct basis elements.
std::vector<CheckResult> check_so5_closure(const AdjointOps& g, const std::string& suite);

}  // namespace yso5
