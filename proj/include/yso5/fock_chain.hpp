#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "yso5/check.hpp"
#include "yso5/drinfeld.hpp"
#include "yso5/so5_rep.hpp"

namespace yso5 {

struct ChainConfig {
    int L = 2;
    Scalar c{1};
    Scalar h{1};
    std::optional<std::vector<Scalar>> one_body_weights;  // one per site
    bool allow_large = false;
};

struct BudgetEstimate {
    size_t dim = 0;
    uint64_t bytes = 0;
    uint64_t budget_bytes = 0;
    bool admitted = false;
    std::string message;
};

// Default budget 1024 MB, overridden by YSO5_MEM_BUDGET_MB. Without allow_large
// only L ≤ 3 is admitted; allow_large lifts the cap to L = 4.
BudgetEstimate estimate_budget(int L, bool allow_large);
// Throws BudgetError carrying the required dimension when not admitted.
void require_budget(int L, bool allow_large);

// Modes are ordered site-major, component-minor: mode(x, α) = 4(x-1) + (α-1).
struct FermionOps {
    int L = 0;
    std::vector<SparseOp> psi;
    std::vector<SparseOp> psi_dagger;

    size_t dim() const { return psi.empty() ? 1 : psi[0].dim(); }
    static size_t mode(int x, int alpha) { return size_t(4 * (x - 1) + (alpha - 1)); }
    const SparseOp& annihilator(int x, int alpha) const { return psi[mode(x, alpha)]; }
    const SparseOp& creator(int x, int alpha) const { return psi_dagger[mode(x, alpha)]; }
};

struct LatticeYangian {
    int L = 0;
    std::vector<AdjointOps> local_density;  // index x-1
    AdjointOps level1;
    AdjointOps level2;
};

FermionOps build_fermions(const ChainConfig& cfg);
// (-1)^N on the Fock space.
SparseOp parity_operator(const FermionOps& f);

// I_ab(x) = Σ_{αβ} g^{ab}_{αβ} ψ†_α(x) ψ_β(x), with g the spinor generators of `cs`.
LatticeYangian build_local_density(const FermionOps& f, const CliffordSet& cs);
// J_ab = -(ic/2) Σ_{x,y} sgn(x-y) Σ_c I_ac(x) I_cb(y) + Σ_x w_x I_ab(x).
void build_level2(const FermionOps& f, const ChainConfig& cfg, LatticeYangian& ly);

std::vector<CheckResult> check_car(const FermionOps& f, const std::string& suite);
std::vector<CheckResult> check_parity(const FermionOps& f, const LatticeYangian& ly, const std::string& suite);
// [I_ab, J_cd] for all 100 ordered basis pairs.
std::vector<CheckResult> check_covariance(const AdjointOps& I, const AdjointOps& J, const std::string& suite);

struct ChainReport {
    std::vector<CheckResult> results;
    std::optional<Scalar> lambda;  // at h = cfg.h
};

// Closure (45), covariance (100), the cubic relation with fitted λ and the
// level-1/level-2 Cartan–Weyl tables, all at h = cfg.h.
ChainReport verify_chain(const LatticeYangian& ly, const ChainConfig& cfg, const std::string& suite);

}  // namespace yso5
