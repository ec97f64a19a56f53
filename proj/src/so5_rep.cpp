#include "yso5/so5_rep.hpp"

#include "yso5/error.hpp"

namespace yso5 {

namespace {

Matrix pauli(int k) {
    Scalar i = Scalar::i();
    switch (k) {
        case 0: return Matrix::identity(2);
        case 1: return Matrix::from_rows({{0, 1}, {1, 0}});
        case 2: return Matrix::from_rows({{0, -i}, {i, 0}});
        default: return Matrix::from_rows({{1, 0}, {0, -1}});
    }
}

int delta(int p, int q) { return p == q ? 1 : 0; }

// Exact solve of a square system by Gauss–Jordan elimination; throws when singular.
std::vector<Scalar> solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
    size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw DomainError("structure constants: generators are linearly dependent");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Scalar inv = a[col][col].inverse();
        for (size_t k = col; k < n; ++k) a[col][k] *= inv;
        b[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    return b;
}

Scalar trace_of_product(const SparseOp& x, const SparseOp& y) {
    Scalar t;
    for (size_t r = 0; r < x.dim(); ++r) {
        auto xc = x.row_cols(r);
        auto xv = x.row_vals(r);
        for (size_t k = 0; k < xc.size(); ++k) t.add_mul(xv[k], y.at(xc[k], r));
    }
    return t;
}

}  // namespace

std::string AdjointIndex::label() const { return "I" + std::to_string(a) + std::to_string(b); }

const std::array<AdjointIndex, 10>& adjoint_basis() {
    static const std::array<AdjointIndex, 10> basis = {
        AdjointIndex{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    return basis;
}

int adjoint_position(int a, int b) {
    if (a < 1 || b > 5 || a >= b) throw DomainError("adjoint index requires 1 <= a < b <= 5");
    const auto& basis = adjoint_basis();
    for (int k = 0; k < 10; ++k)
        if (basis[k].a == a && basis[k].b == b) return k;
    throw DomainError("unreachable adjoint index");
}

SparseOp AdjointOps::get(int a, int b) const {
    if (a == b) return SparseOp(dim());
    if (a < b) return ops[adjoint_position(a, b)];
    return -ops[adjoint_position(b, a)];
}

CliffordSet build_clifford() {
    CliffordSet cs;
    cs.gammas[0] = kron(pauli(1), pauli(3));
    cs.gammas[1] = kron(pauli(2), pauli(3));
    cs.gammas[2] = kron(pauli(3), pauli(3));
    cs.gammas[3] = kron(pauli(0), pauli(1));
    cs.gammas[4] = kron(pauli(0), pauli(2));
    return cs;
}

bool clifford_valid(const CliffordSet& cs) {
    Matrix id = Matrix::identity(4);
    for (int a = 0; a < 5; ++a) {
        if (cs.gammas[a].rows() != 4 || cs.gammas[a].cols() != 4) return false;
        for (int b = 0; b < 5; ++b)
            if (anticommutator(cs.gammas[a], cs.gammas[b]) != Scalar(2 * delta(a, b)) * id) return false;
    }
    return true;
}

GeneratorSet build_spinor_generators(const CliffordSet& cs, GeneratorSign sign, bool validate) {
    if (validate && !clifford_valid(cs)) throw DomainError("Clifford invariant violated: {G^a,G^b} != 2 delta_ab I4");
    Scalar pref = Scalar(Rational(0), Rational(sign == GeneratorSign::Consistent ? 1 : -1, 2));
    GeneratorSet g;
    g.rep_dim = 4;
    const auto& basis = adjoint_basis();
    for (size_t k = 0; k < 10; ++k)
        g.gens.ops[k] = SparseOp::from_matrix(pref * (cs.gammas[basis[k].a - 1] * cs.gammas[basis[k].b - 1]));
    return g;
}

GeneratorSet build_vector_generators(GeneratorSign sign) {
    Scalar pref = sign == GeneratorSign::Consistent ? Scalar::i() : -Scalar::i();
    GeneratorSet g;
    g.rep_dim = 5;
    const auto& basis = adjoint_basis();
    for (size_t k = 0; k < 10; ++k) {
        int a = basis[k].a, b = basis[k].b;
        Matrix m(5, 5);
        for (int c = 1; c <= 5; ++c)
            for (int d = 1; d <= 5; ++d) {
                int v = delta(a, c) * delta(b, d) - delta(a, d) * delta(b, c);
                if (v) m(c - 1, d - 1) = Scalar(v) * pref;
            }
        g.gens.ops[k] = SparseOp::from_matrix(m);
    }
    return g;
}

const std::array<std::string_view, 10>& CartanWeylSet::names() {
    static const std::array<std::string_view, 10> n = {"E3", "F3", "Ep", "Em", "Fp", "Fm", "Up", "Um", "Vp", "Vm"};
    return n;
}

const SurdOp& CartanWeylSet::get(std::string_view name) const {
    const SurdOp* members[] = {&e3, &f3, &e_plus, &e_minus, &f_plus, &f_minus, &u_plus, &u_minus, &v_plus, &v_minus};
    const auto& n = names();
    for (size_t k = 0; k < n.size(); ++k)
        if (n[k] == name) return *members[k];
    throw DomainError("unknown Cartan-Weyl member " + std::string(name));
}

CartanWeylSet to_cartan_weyl(const AdjointOps& g, const Scalar& h, int level, CwConvention conv) {
    if (level < 1) throw DomainError("Cartan-Weyl level must be >= 1");
    if (h.is_zero() && level >= 2) throw DomainError("Cartan-Weyl map at level >= 2 requires h != 0");
    Scalar f = pow(h, 1 - level);
    Scalar i = Scalar::i();
    // plus-type members use (X - iY) under the conjugated convention
    Scalar sp = conv == CwConvention::Conjugated ? -i : i;
    Scalar sm = -sp;
    auto I = [&](int a, int b) { return g.get(a, b); };
    Scalar half = Scalar::frac(1, 2);

    CartanWeylSet cw;
    cw.e3 = SurdOp(f * I(2, 3));
    cw.f3 = SurdOp(f * I(1, 5));
    cw.e_plus = SurdOp::over_sqrt2(f * (I(3, 4) + sp * I(4, 2)));
    cw.e_minus = SurdOp::over_sqrt2(f * (I(3, 4) + sm * I(4, 2)));
    cw.f_plus = SurdOp::over_sqrt2(f * (I(4, 5) + sp * I(1, 4)));
    cw.f_minus = SurdOp::over_sqrt2(f * (I(4, 5) + sm * I(1, 4)));
    SparseOp ap = I(3, 1) + sp * I(1, 2), am = I(3, 1) + sm * I(1, 2);
    SparseOp bp = I(2, 5) + sp * I(3, 5), bm = I(2, 5) + sm * I(3, 5);
    cw.u_plus = SurdOp((f * half) * (ap - bp));
    cw.u_minus = SurdOp((f * half) * (am - bm));
    cw.v_plus = SurdOp((f * half) * (ap + bp));
    cw.v_minus = SurdOp((f * half) * (am + bm));
    return cw;
}

StructureTensor structure_constants(const AdjointOps& g) {
    StructureTensor st;
    st.basis_labels = adjoint_basis();
    std::vector<std::vector<Scalar>> gram(10, std::vector<Scalar>(10));
    for (size_t n = 0; n < 10; ++n)
        for (size_t k = 0; k < 10; ++k) gram[n][k] = trace_of_product(g[n], g[k]);
    for (size_t l = 0; l < 10; ++l)
        for (size_t m = 0; m < 10; ++m) {
            SparseOp br = commutator(g[l], g[m]);
            std::vector<Scalar> rhs(10);
            for (size_t k = 0; k < 10; ++k) rhs[k] = trace_of_product(br, g[k]);
            std::vector<Scalar> c = solve(gram, rhs);
            SparseOp resid = br;
            for (size_t n = 0; n < 10; ++n) {
                st.c[l][m][n] = c[n];
                resid = resid - c[n] * g[n];
            }
            if (!resid.is_zero())
                throw DomainError("structure constants: [" + adjoint_basis()[l].label() + "," +
                                  adjoint_basis()[m].label() + "] does not close on the basis");
        }
    return st;
}

SparseOp adjoint_residual(const AdjointOps& I, const AdjointOps& X, AdjointIndex p, AdjointIndex q) {
    int a = p.a, b = p.b, c = q.a, d = q.b;
    SparseOp rhs(I.dim());
    if (b == c) rhs += X.get(a, d);
    if (a == d) rhs += X.get(b, c);
    if (a == c) rhs -= X.get(b, d);
    if (b == d) rhs -= X.get(a, c);
    return commutator(I.get(a, b), X.get(c, d)) - Scalar::i() * rhs;
}

std::vector<CheckResult> check_so5_closure(const AdjointOps& g, const std::string& suite) {
    std::vector<CheckResult> out;
    const auto& basis = adjoint_basis();
    for (size_t l = 0; l < 10; ++l)
        for (size_t m = l + 1; m < 10; ++m)
            out.push_back(residual_result(suite, "[" + basis[l].label() + "," + basis[m].label() + "]",
                                          "so5-closure", adjoint_residual(g, g, basis[l], basis[m])));
    return out;
}

}  // namespace yso5
