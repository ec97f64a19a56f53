#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "yso5/sparse_op.hpp"

namespace yso5 {

// P^{ab}_{cd} = δ_ad δ_bc, A^{ab}_{cd} = δ_{a,-b} δ_{c,-d}, I; labels run
// (N-1)/2 down to -(N-1)/2 along rows, pair (a,c) at row a·N + c.
struct BlockMatrices {
    int N = 0;
    SparseOp P, A, I;
};

// Ř(u) = coeff2·u² + coeff1·u + coeff0 on the N²-dimensional pair space.
struct RCheckPoly {
    int N = 0;
    std::vector<int> n_labels;
    Scalar x;
    SparseOp coeff2, coeff1, coeff0;

    SparseOp eval(const Scalar& u) const;
};

std::vector<int> index_labels(int N);
int label_row(int N, int label);

BlockMatrices build_blocks(int N);
// General family u²P + u(q1 P + x A + q2 I) + q1 q2 I with q1 = (1 - N/2)x, q2 = -x.
RCheckPoly build_rcheck(int N, const Scalar& x);
// Direct form u²P + u·x(A - I - 3/2 P) + 3/2 x² I.
RCheckPoly build_rcheck_so5(const Scalar& x);
// The general family with the A block removed. This is (u + q1)(uP + q2 I), a scalar
// multiple of the gl(N) solution, so it still satisfies the braid relation.
RCheckPoly build_rcheck_without_a(int N, const Scalar& x);
// The general family with x·A replaced by weight·x·A; any weight other than 0 or 1
// breaks the braid relation.
RCheckPoly build_rcheck_a_weight(int N, const Scalar& x, const Scalar& weight);

struct YbePoint {
    Scalar u, v;
    bool pass = true;
    std::optional<Witness> witness;
};

struct YbeReport {
    int N = 0;
    Scalar x;
    bool pass = true;
    std::vector<YbePoint> points;  // sorted by (u, v)
};

std::vector<std::pair<Scalar, Scalar>> square_grid(int size);

// Ř12(u)Ř23(u+v)Ř12(v) = Ř23(v)Ř12(u+v)Ř23(u) at every point of a product grid
// with at least 7 distinct u and 7 distinct v values.
YbeReport ybe_check(const RCheckPoly& r, const std::vector<std::pair<Scalar, Scalar>>& grid);

// Coefficients (u^0..u^4) of the scalar polynomial p with Ř(u)Ř(-u) = p(u)·I,
// or nullopt when some coefficient is not a multiple of the identity.
std::optional<std::vector<Scalar>> unitarity_polynomial(const RCheckPoly& r);

std::optional<Scalar> identity_multiple(const SparseOp& m);

}  // namespace yso5
