#include "yso5/rmatrix.hpp"

#include <algorithm>
#include <set>

#include "yso5/error.hpp"

namespace yso5 {

std::vector<int> index_labels(int N) {
    std::vector<int> out;
    for (int k = 0; k < N; ++k) out.push_back((N - 1) / 2 - k);
    return out;
}

int label_row(int N, int label) { return (N - 1) / 2 - label; }

SparseOp RCheckPoly::eval(const Scalar& u) const { return (u * u) * coeff2 + u * coeff1 + coeff0; }

BlockMatrices build_blocks(int N) {
    if (N < 3 || N % 2 == 0) throw DomainError("build_blocks requires odd N >= 3, got " + std::to_string(N));
    std::vector<int> lab = index_labels(N);
    size_t n = size_t(N);
    std::vector<Triplet> p, a;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            p.push_back({i * n + j, j * n + i, Scalar(1)});
            if (lab[i] != -lab[j]) continue;
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    if (lab[k] == -lab[l]) a.push_back({i * n + j, k * n + l, Scalar(1)});
        }
    BlockMatrices b;
    b.N = N;
    b.P = SparseOp::from_triplets(n * n, std::move(p));
    b.A = SparseOp::from_triplets(n * n, std::move(a));
    b.I = SparseOp::identity(n * n);
    return b;
}

namespace {

RCheckPoly family(int N, const Scalar& x, const Scalar& a_weight) {
    BlockMatrices b = build_blocks(N);
    Scalar q1 = (Scalar(1) - Scalar::frac(N, 2)) * x;
    Scalar q2 = -x;
    RCheckPoly r;
    r.N = N;
    r.n_labels = index_labels(N);
    r.x = x;
    r.coeff2 = b.P;
    r.coeff1 = q1 * b.P + q2 * b.I;
    if (!a_weight.is_zero()) r.coeff1 = r.coeff1 + (a_weight * x) * b.A;
    r.coeff0 = (q1 * q2) * b.I;
    return r;
}

}  // namespace

RCheckPoly build_rcheck(int N, const Scalar& x) { return family(N, x, Scalar(1)); }

RCheckPoly build_rcheck_without_a(int N, const Scalar& x) { return family(N, x, Scalar(0)); }

RCheckPoly build_rcheck_a_weight(int N, const Scalar& x, const Scalar& weight) { return family(N, x, weight); }

RCheckPoly build_rcheck_so5(const Scalar& x) {
    BlockMatrices b = build_blocks(5);
    RCheckPoly r;
    r.N = 5;
    r.n_labels = index_labels(5);
    r.x = x;
    r.coeff2 = b.P;
    r.coeff1 = x * (b.A - b.I - Scalar::frac(3, 2) * b.P);
    r.coeff0 = (Scalar::frac(3, 2) * x * x) * b.I;
    return r;
}

std::vector<std::pair<Scalar, Scalar>> square_grid(int size) {
    std::vector<std::pair<Scalar, Scalar>> g;
    for (int u = 0; u < size; ++u)
        for (int v = 0; v < size; ++v) g.emplace_back(Scalar(u), Scalar(v));
    return g;
}

namespace {

bool scalar_less(const Scalar& a, const Scalar& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

struct ScalarLess {
    bool operator()(const Scalar& a, const Scalar& b) const { return scalar_less(a, b); }
};

struct PairLess {
    bool operator()(const std::pair<Scalar, Scalar>& p, const std::pair<Scalar, Scalar>& q) const {
        if (p.first != q.first) return scalar_less(p.first, q.first);
        return scalar_less(p.second, q.second);
    }
};

}  // namespace

YbeReport ybe_check(const RCheckPoly& r, const std::vector<std::pair<Scalar, Scalar>>& grid) {
    std::set<Scalar, ScalarLess> us, vs;
    std::set<std::pair<Scalar, Scalar>, PairLess> pts;
    for (const auto& [u, v] : grid) {
        us.insert(u);
        vs.insert(v);
        pts.insert({u, v});
    }
    if (us.size() < 7 || vs.size() < 7)
        throw DomainError("YBE grid too small: need at least 7 distinct u and 7 distinct v values");
    if (pts.size() != grid.size() || pts.size() != us.size() * vs.size())
        throw DomainError("YBE grid must be a full product grid without repeated points");

    size_t n = size_t(r.N);
    SparseOp id = SparseOp::identity(n);
    auto lift12 = [&](const SparseOp& m) { return kron(m, id); };
    auto lift23 = [&](const SparseOp& m) { return kron(id, m); };
    const SparseOp a2 = lift12(r.coeff2), a1 = lift12(r.coeff1), a0 = lift12(r.coeff0);
    const SparseOp b2 = lift23(r.coeff2), b1 = lift23(r.coeff1), b0 = lift23(r.coeff0);
    auto r12 = [&](const Scalar& u) { return (u * u) * a2 + u * a1 + a0; };
    auto r23 = [&](const Scalar& u) { return (u * u) * b2 + u * b1 + b0; };

    YbeReport rep;
    rep.N = r.N;
    rep.x = r.x;
    for (const auto& [u, v] : pts) {
        SparseOp lhs = r12(u) * r23(u + v) * r12(v);
        SparseOp rhs = r23(v) * r12(u + v) * r23(u);
        YbePoint p{u, v, true, std::nullopt};
        SparseOp diff = lhs - rhs;
        if (!diff.is_zero()) {
            p.pass = false;
            p.witness = diff.first_nonzero();
            rep.pass = false;
        }
        rep.points.push_back(std::move(p));
    }
    return rep;
}

std::optional<Scalar> identity_multiple(const SparseOp& m) {
    Scalar s = m.at(0, 0);
    if (m == SparseOp::scalar(m.dim(), s)) return s;
    return std::nullopt;
}

std::optional<std::vector<Scalar>> unitarity_polynomial(const RCheckPoly& r) {
    const SparseOp &c2 = r.coeff2, &c1 = r.coeff1, &c0 = r.coeff0;
    std::vector<SparseOp> coeffs = {
        c0 * c0,
        c1 * c0 - c0 * c1,
        c2 * c0 - c1 * c1 + c0 * c2,
        c1 * c2 - c2 * c1,
        c2 * c2,
    };
    std::vector<Scalar> out;
    for (const auto& c : coeffs) {
        auto s = identity_multiple(c);
        if (!s) return std::nullopt;
        out.push_back(*s);
    }
    return out;
}

}  // namespace yso5
