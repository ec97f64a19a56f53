#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "yso5/check.hpp"
#include "yso5/free_poly.hpp"
#include "yso5/sparse_op.hpp"

namespace yso5 {

// One coefficient entry of the RTT defect, asserted to vanish.
struct Relation {
    std::string label;
    int i = 0;  // power u^{-i}
    int j = 0;  // power v^{-j}
    std::array<int, 4> entry{};  // (a,b;c,d)
    Scalar prefactor;            // x^{i+j+2}, divided out of `poly`
    FreePoly poly;               // normalised
};

struct RelationSet {
    int max_level = 0;
    std::vector<Relation> relations;
};

// The u^{-i} v^{-j} coefficient of Ř(u-v)(T(u)⊗T(v)) - (T(v)⊗T(u))Ř(u-v) at
// entry (a,b;c,d) with u = x·ũ, before normalisation. Orders run from -2.
FreePoly rtt_coefficient(int i, int j, int a, int b, int c, int d);

// All nonzero coefficients with -2 ≤ i ≤ i_max, -2 ≤ j ≤ j_max.
RelationSet expand_rtt(int i_max, int j_max, const Scalar& x);

enum class ExplicitRelation { Mixed, LeftLevelOne, RightLevelOne };

// The hand-coded commutation relations:
//   Mixed(n, m): general level (n, m) relation, n ≥ -1, m ≥ 0;
//   LeftLevelOne(m): [T1_bc, Tm_ad] + δ-terms;
//   RightLevelOne(n): [Tn_bc, T1_ad] + δ-terms.
FreePoly explicit_relation(ExplicitRelation kind, int n, int m, int a, int b, int c, int d);

const std::array<int, 5>& aux_labels();  // 2,1,0,-1,-2
int aux_row(int label);

struct LaxRep {
    size_t quantum_dim = 0;
    int max_level = 0;
    std::map<GenSymbol, SparseOp> assign;

    // Level 0 gives δ_ab·1, negative levels vanish; throws for unassigned symbols.
    SparseOp T(int level, int a, int b) const;
};

LaxRep build_lax(const Scalar& x, const Scalar& theta, int max_level);
LaxRep build_monodromy(const Scalar& x, const std::vector<Scalar>& thetas, int max_level);

// Named combinations of the 25 entries of one level.
struct ComponentSet {
    int level = 0;
    std::map<std::string, SparseOp, std::less<>> named;

    const SparseOp& get(std::string_view name) const;
    // The level matrix reassembled from the components, keyed like LaxRep::assign.
    std::map<std::pair<int, int>, SparseOp> reassemble() const;
};

const std::vector<std::string>& component_names();
ComponentSet extract_components(const LaxRep& rep, int n);

SparseOp evaluate(const FreePoly& p, const LaxRep& rep);
std::vector<CheckResult> eval_relations(const RelationSet& rs, const LaxRep& rep, const std::string& suite);

// Level-1, level-2, independent and iterative constraint tables (n = 2).
std::vector<CheckResult> check_constraints(const LaxRep& rep, const std::string& suite);

}  // namespace yso5
