#include "yso5/drinfeld.hpp"

#include <algorithm>
#include <memory>

#include "yso5/error.hpp"
#include "yso5/relation_tables.hpp"

namespace yso5 {

Scalar ATensor::at(int l, int m, int n, int a, int b, int g) const {
    auto it = entries.find({l, m, n, a, b, g});
    return it == entries.end() ? Scalar() : it->second;
}

std::vector<std::pair<std::array<int, 3>, Scalar>> ATensor::slice(int l, int m, int n) const {
    std::vector<std::pair<std::array<int, 3>, Scalar>> out;
    for (auto it = entries.lower_bound({l, m, n, 0, 0, 0}); it != entries.end(); ++it) {
        const auto& k = it->first;
        if (k[0] != l || k[1] != m || k[2] != n) break;
        out.push_back({{k[3], k[4], k[5]}, it->second});
    }
    return out;
}

ATensor compute_a_tensor(const StructureTensor& c) {
    struct Nz {
        int x, y, z;
        Scalar v;
    };
    std::vector<Nz> nz;
    for (int x = 0; x < 10; ++x)
        for (int y = 0; y < 10; ++y)
            for (int z = 0; z < 10; ++z)
                if (!c.c[x][y][z].is_zero()) nz.push_back({x, y, z, c.c[x][y][z]});
    std::map<std::array<int, 6>, Scalar> acc;
    for (const auto& p : nz)          // c_{λασ}
        for (const auto& q : nz)      // c_{μβτ}
            for (const auto& r : nz) {  // c_{νγρ}
                const Scalar& w = c.c[p.z][q.z][r.z];
                if (w.is_zero()) continue;
                acc[{p.x, q.x, r.x, p.y, q.y, r.y}] += p.v * q.v * r.v * w;
            }
    ATensor a;
    Scalar inv24 = Scalar::frac(1, 24);
    for (auto& [k, v] : acc)
        if (!v.is_zero()) a.entries.emplace(k, inv24 * v);
    return a;
}

SparseOp triple_product(const SparseOp& x1, const SparseOp& x2, const SparseOp& x3) {
    return x1 * x2 * x3 + x1 * x3 * x2 + x2 * x1 * x3 + x2 * x3 * x1 + x3 * x1 * x2 + x3 * x2 * x1;
}

Matrix triple_product(const Matrix& x1, const Matrix& x2, const Matrix& x3) {
    return x1 * x2 * x3 + x1 * x3 * x2 + x2 * x1 * x3 + x2 * x3 * x1 + x3 * x1 * x2 + x3 * x2 * x1;
}

const std::array<int, 4>& generating_subset() {
    static const std::array<int, 4> s = {adjoint_position(1, 2), adjoint_position(2, 3), adjoint_position(3, 4),
                                         adjoint_position(4, 5)};
    return s;
}

std::vector<Quadruple> default_quadruples() {
    std::vector<Quadruple> out;
    for (int l : generating_subset())
        for (int m : generating_subset())
            for (int s : generating_subset())
                for (int t : generating_subset()) out.push_back({l, m, s, t});
    return out;
}

namespace {

const std::string& lab(int k) {
    static const std::array<std::string, 10> labels = [] {
        std::array<std::string, 10> l;
        for (size_t i = 0; i < 10; ++i) l[i] = adjoint_basis()[i].label();
        return l;
    }();
    return labels[size_t(k)];
}

SparseOp expand_in_basis(const StructureTensor& c, int l, int m, const AdjointOps& fam) {
    SparseOp out(fam.dim());
    for (int n = 0; n < 10; ++n)
        if (!c.c[l][m][n].is_zero()) out += c.c[l][m][n] * fam[size_t(n)];
    return out;
}

}  // namespace

std::vector<CheckResult> check_drinfeld(const YangianPair& yp, const StructureTensor& c, const ATensor& a,
                                        const std::string& suite, const std::vector<Quadruple>& quads) {
    const AdjointOps& I = yp.level1;
    const AdjointOps& J = yp.level2;
    if (I.dim() != J.dim()) throw DimensionError("Yangian pair levels have different dimensions");
    const Scalar h2 = yp.h * yp.h;
    std::vector<CheckResult> out;

    for (int l = 0; l < 10; ++l)
        for (int m = l + 1; m < 10; ++m)
            out.push_back(residual_result(suite, "[" + lab(l) + "," + lab(m) + "]", "drinfeld-linear-I",
                                          commutator(I[size_t(l)], I[size_t(m)]) - expand_in_basis(c, l, m, I)));
    for (int l = 0; l < 10; ++l)
        for (int m = 0; m < 10; ++m)
            out.push_back(residual_result(suite, "[" + lab(l) + ",J" + lab(m).substr(1) + "]", "drinfeld-linear-J",
                                          commutator(I[size_t(l)], J[size_t(m)]) - expand_in_basis(c, l, m, J)));

    std::map<std::array<int, 3>, SparseOp> sym_iii;
    auto sym3 = [&](std::array<int, 3> k) -> const SparseOp& {
        std::sort(k.begin(), k.end());
        auto it = sym_iii.find(k);
        if (it == sym_iii.end())
            it = sym_iii.emplace(k, triple_product(I[size_t(k[0])], I[size_t(k[1])], I[size_t(k[2])])).first;
        return it->second;
    };
    for (int l = 0; l < 10; ++l)
        for (int m = l + 1; m < 10; ++m)
            for (int n = m + 1; n < 10; ++n) {
                SparseOp lhs = commutator(J[size_t(l)], commutator(J[size_t(m)], I[size_t(n)])) -
                               commutator(I[size_t(l)], commutator(J[size_t(m)], J[size_t(n)]));
                SparseOp rhs(I.dim());
                for (const auto& [k, v] : a.slice(l, m, n)) rhs += v * sym3(k);
                out.push_back(residual_result(suite, "(" + lab(l) + "," + lab(m) + "," + lab(n) + ")",
                                              "drinfeld-cubic", lhs - h2 * rhs));
            }

    std::map<std::array<int, 3>, SparseOp> sym_iij;
    auto sym_ij = [&](int al, int be, int ga) -> const SparseOp& {
        std::array<int, 3> k = {std::min(al, be), std::max(al, be), ga};
        auto it = sym_iij.find(k);
        if (it == sym_iij.end())
            it = sym_iij.emplace(k, triple_product(I[size_t(k[0])], I[size_t(k[1])], J[size_t(k[2])])).first;
        return it->second;
    };
    for (const auto& q : quads) {
        int l = q[0], m = q[1], s = q[2], t = q[3];
        SparseOp lhs = commutator(commutator(J[size_t(l)], J[size_t(m)]), commutator(I[size_t(s)], J[size_t(t)])) +
                       commutator(commutator(J[size_t(s)], J[size_t(t)]), commutator(I[size_t(l)], J[size_t(m)]));
        std::map<std::array<int, 3>, Scalar> coeff;
        for (int n = 0; n < 10; ++n) {
            const Scalar& cst = c.c[s][t][n];
            const Scalar& clm = c.c[l][m][n];
            if (!cst.is_zero())
                for (const auto& [k, v] : a.slice(l, m, n)) coeff[k] += v * cst;
            if (!clm.is_zero())
                for (const auto& [k, v] : a.slice(s, t, n)) coeff[k] += v * clm;
        }
        SparseOp rhs(I.dim());
        for (const auto& [k, v] : coeff)
            if (!v.is_zero()) rhs += v * sym_ij(k[0], k[1], k[2]);
        out.push_back(residual_result(suite, "(" + lab(l) + "," + lab(m) + "," + lab(s) + "," + lab(t) + ")",
                                      "drinfeld-quartic", lhs - h2 * rhs));
    }
    return out;
}

SerreReport check_serre(const YangianPair& yp, const std::string& suite) {
    const AdjointOps& I = yp.level1;
    const AdjointOps& J = yp.level2;
    SparseOp lhs = commutator(J.get(2, 3), J.get(1, 5));
    SparseOp cubic = triple_product(I.get(1, 3), I.get(4, 2), I.get(4, 5)) +
                     triple_product(I.get(1, 2), I.get(4, 5), I.get(3, 4)) -
                     triple_product(I.get(1, 4), I.get(4, 2), I.get(3, 5)) -
                     triple_product(I.get(1, 4), I.get(3, 4), I.get(2, 5));
    SparseOp rhs = (Scalar(Rational(0), Rational(1, 24)) * yp.h * yp.h) * cubic;

    SerreReport rep;
    rep.lhs_zero = lhs.is_zero();
    rep.rhs_zero = rhs.is_zero();
    CheckResult main = residual_result(suite, "[J23,J15]", "serre-adjoint", lhs - rhs);
    if (!rep.rhs_zero) {
        Witness w = *rhs.first_nonzero();
        Scalar lam = lhs.at(w.row, w.col) / w.value;
        if ((lhs - lam * rhs).is_zero()) rep.lambda = lam;
    }
    main.metrics.emplace_back("lhs_zero", rep.lhs_zero ? "true" : "false");
    main.metrics.emplace_back("rhs_zero", rep.rhs_zero ? "true" : "false");
    if (rep.lambda) {
        main.metrics.emplace_back("fitted_lambda", rep.lambda->to_string());
        main.metrics.emplace_back("fitted_lambda_at_h1", (*rep.lambda * yp.h * yp.h).to_string());
    } else {
        main.metrics.emplace_back("fitted_lambda", rep.lhs_zero && rep.rhs_zero ? "undetermined" : "not proportional");
    }
    rep.results.push_back(std::move(main));
    auto cw = check_cw_tables(yp, "cw-cubic", nullptr, suite);
    rep.results.insert(rep.results.end(), cw.begin(), cw.end());
    return rep;
}

std::vector<CheckResult> check_cw_tables(const YangianPair& yp, const std::string& table, const LaxRep* rep_extra,
                                         const std::string& suite, const std::vector<int>& n_values) {
    const RelationTable& t = relation_table(table);
    SymbolResolver resolve;
    size_t dim = yp.level1.dim();
    if (t.name == "rtt-level-n" || t.name == "rtt-tilde") {
        if (!rep_extra) throw DomainError("table " + t.name + " needs a Lax representation");
        dim = rep_extra->quantum_dim;
        auto levels = std::make_shared<std::map<int, ComponentSet>>();
        resolve = [rep_extra, levels](std::string_view name, int level) -> SurdOp {
            auto it = levels->find(level);
            if (it == levels->end()) it = levels->emplace(level, extract_components(*rep_extra, level)).first;
            return SurdOp(it->second.get(name));
        };
    } else {
        std::map<int, CartanWeylSet> cw;
        cw.emplace(1, to_cartan_weyl(yp.level1, yp.h, 1));
        cw.emplace(2, to_cartan_weyl(yp.level2, yp.h, 2));
        resolve = [cw, &yp](std::string_view name, int level) -> SurdOp {
            if (level != 1 && level != 2) throw DomainError("adjoint pair has only levels 1 and 2");
            if (name.size() == 3 && name[0] == 'I') {
                const AdjointOps& fam = level == 1 ? yp.level1 : yp.level2;
                return SurdOp(fam.get(name[1] - '0', name[2] - '0'));
            }
            return cw.at(level).get(name);
        };
    }
    return check_table(t, cached(resolve), dim, n_values, suite);
}

AdjointOps phi_map(const ComponentSet& cs) {
    const Scalar i = Scalar::i(), half = Scalar::frac(1, 2);
    const SparseOp &E3 = cs.get("E3"), &F3 = cs.get("F3");
    const SparseOp &Ep = cs.get("Ep"), &Em = cs.get("Em"), &Fp = cs.get("Fp"), &Fm = cs.get("Fm");
    const SparseOp &Up = cs.get("Up"), &Um = cs.get("Um");
    SparseOp Vp2 = Scalar(2) * cs.get("Vp"), Vm2 = half * cs.get("Vm");

    std::map<std::pair<int, int>, SparseOp> m;
    m[{2, 3}] = E3;
    m[{1, 5}] = F3;
    m[{3, 4}] = Ep + half * Em;
    m[{4, 2}] = i * (Ep - half * Em);
    m[{4, 5}] = Fp + half * Fm;
    m[{1, 4}] = i * (Fp - half * Fm);
    m[{3, 1}] = half * (Up + Vp2 + Um + Vm2);
    m[{1, 2}] = (half * i) * (Up + Vp2 - Um - Vm2);
    m[{2, 5}] = half * (Vp2 - Up + Vm2 - Um);
    m[{3, 5}] = (half * i) * (Vp2 - Up - Vm2 + Um);

    AdjointOps out;
    for (const auto& [k, v] : m) {
        if (k.first < k.second)
            out.ops[size_t(adjoint_position(k.first, k.second))] = v;
        else
            out.ops[size_t(adjoint_position(k.second, k.first))] = -v;
    }
    return out;
}

YangianPair lax_yangian_pair(const LaxRep& rep) {
    YangianPair yp;
    yp.level1 = phi_map(extract_components(rep, 1));
    yp.level2 = phi_map(extract_components(rep, 2));
    yp.h = Scalar(1);
    return yp;
}

}  // namespace yso5
