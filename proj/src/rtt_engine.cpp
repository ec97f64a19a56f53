#include "yso5/rtt_engine.hpp"

#include "yso5/error.hpp"
#include "yso5/relation_tables.hpp"

namespace yso5 {

const std::array<int, 5>& aux_labels() {
    static const std::array<int, 5> labels = {2, 1, 0, -1, -2};
    return labels;
}

int aux_row(int label) {
    if (label < -2 || label > 2) throw DomainError("aux label out of range: " + std::to_string(label));
    return 2 - label;
}

namespace {

bool in_range(int label) { return label >= -2 && label <= 2; }

FreePoly T(int n, int p, int q) {
    if (n < 0 || !in_range(p) || !in_range(q)) return FreePoly();
    if (n == 0) return FreePoly::constant(Scalar(p == q ? 1 : 0));
    return FreePoly::symbol({n, p, q});
}

// (T(k)⊗T(l))^{pq}_{rs} = T(k)_{pr} T(l)_{qs}
FreePoly tt(int k, int l, int p, int q, int r, int s) {
    if (k < 0 || l < 0) return FreePoly();
    return T(k, p, r) * T(l, q, s);
}

FreePoly p_left(int k, int l, int a, int b, int c, int d) { return tt(k, l, b, a, c, d); }

FreePoly p_right(int k, int l, int a, int b, int c, int d) { return tt(k, l, a, b, d, c); }

// K = A - I - 3/2 P acting from the left / right.
FreePoly k_left(int k, int l, int a, int b, int c, int d) {
    if (k < 0 || l < 0) return FreePoly();
    FreePoly r;
    if (a == -b)
        for (int e : aux_labels()) r += tt(k, l, e, -e, c, d);
    r -= tt(k, l, a, b, c, d);
    r -= Scalar::frac(3, 2) * tt(k, l, b, a, c, d);
    return r;
}

FreePoly k_right(int k, int l, int a, int b, int c, int d) {
    if (k < 0 || l < 0) return FreePoly();
    FreePoly r;
    if (c == -d)
        for (int e : aux_labels()) r += tt(k, l, a, b, e, -e);
    r -= tt(k, l, a, b, c, d);
    r -= Scalar::frac(3, 2) * tt(k, l, a, b, d, c);
    return r;
}

int delta(int p, int q) { return p == q ? 1 : 0; }

}  // namespace

FreePoly rtt_coefficient(int i, int j, int a, int b, int c, int d) {
    const Scalar two(2), three_halves = Scalar::frac(3, 2);
    FreePoly s;
    s += p_left(i + 2, j, a, b, c, d);
    s -= two * p_left(i + 1, j + 1, a, b, c, d);
    s += p_left(i, j + 2, a, b, c, d);
    s += k_left(i + 1, j, a, b, c, d);
    s -= k_left(i, j + 1, a, b, c, d);
    s += three_halves * tt(i, j, a, b, c, d);
    s -= p_right(j, i + 2, a, b, c, d);
    s += two * p_right(j + 1, i + 1, a, b, c, d);
    s -= p_right(j + 2, i, a, b, c, d);
    s -= k_right(j, i + 1, a, b, c, d);
    s += k_right(j + 1, i, a, b, c, d);
    s -= three_halves * tt(j, i, a, b, c, d);
    return s;
}

RelationSet expand_rtt(int i_max, int j_max, const Scalar& x) {
    if (i_max < 1 || j_max < 1) throw DomainError("expand_rtt requires i_max, j_max >= 1");
    RelationSet rs;
    rs.max_level = std::max(i_max, j_max) + 2;
    for (int i = -2; i <= i_max; ++i)
        for (int j = -2; j <= j_max; ++j)
            for (int a : aux_labels())
                for (int b : aux_labels())
                    for (int c : aux_labels())
                        for (int d : aux_labels()) {
                            FreePoly p = rtt_coefficient(i, j, a, b, c, d);
                            if (p.is_zero()) continue;
                            Relation r;
                            r.label = "S(" + std::to_string(i) + "," + std::to_string(j) + ")[" + std::to_string(a) +
                                      "," + std::to_string(b) + ";" + std::to_string(c) + "," + std::to_string(d) +
                                      "]";
                            r.i = i;
                            r.j = j;
                            r.entry = {a, b, c, d};
                            r.prefactor = pow(x, i + j + 2);
                            r.poly = p.normalized();
                            rs.relations.push_back(std::move(r));
                        }
    return rs;
}

FreePoly explicit_relation(ExplicitRelation kind, int n, int m, int a, int b, int c, int d) {
    switch (kind) {
        case ExplicitRelation::LeftLevelOne: {
            FreePoly r = commutator(T(1, b, c), T(m, a, d));
            r += Scalar(delta(a, -b)) * T(m, -c, d);
            r -= Scalar(delta(c, -d)) * T(m, a, -b);
            r -= Scalar(delta(a, c)) * T(m, b, d);
            r += Scalar(delta(b, d)) * T(m, a, c);
            return r;
        }
        case ExplicitRelation::RightLevelOne: {
            FreePoly r = commutator(T(n, b, c), T(1, a, d));
            r += Scalar(delta(c, -d)) * T(n, b, -a);
            r -= Scalar(delta(a, -b)) * T(n, -d, c);
            r -= Scalar(delta(a, c)) * T(n, b, d);
            r += Scalar(delta(b, d)) * T(n, a, c);
            return r;
        }
        case ExplicitRelation::Mixed: {
            if (n < -1 || m < 0) throw DomainError("mixed relation requires n >= -1, m >= 0");
            const Scalar two(2), three_halves = Scalar::frac(3, 2);
            FreePoly r = commutator(T(n + 2, b, c), T(m, a, d));
            r -= two * commutator(T(n + 1, b, c), T(m + 1, a, d));
            r += commutator(T(n, b, c), T(m + 2, a, d));
            if (a == -b)
                for (int e : aux_labels()) r += T(n + 1, e, c) * T(m, -e, d) - T(n, e, c) * T(m + 1, -e, d);
            if (c == -d)
                for (int e : aux_labels()) r += T(m + 1, a, e) * T(n, b, -e) - T(m, a, e) * T(n + 1, b, -e);
            r -= three_halves * (commutator(T(n + 1, b, c), T(m, a, d)) - commutator(T(n, b, c), T(m + 1, a, d)));
            r -= T(n + 1, a, c) * T(m, b, d);
            r += T(n, a, c) * T(m + 1, b, d);
            r += T(m, a, c) * T(n + 1, b, d);
            r -= T(m + 1, a, c) * T(n, b, d);
            r += three_halves * (T(n, a, c) * T(m, b, d) - T(m, a, c) * T(n, b, d));
            return r;
        }
    }
    throw DomainError("unknown relation kind");
}

SparseOp LaxRep::T(int level, int a, int b) const {
    if (level < 0) return SparseOp(quantum_dim);
    if (level == 0) return a == b ? SparseOp::identity(quantum_dim) : SparseOp(quantum_dim);
    auto it = assign.find(GenSymbol{level, a, b});
    if (it == assign.end()) throw DomainError("unassigned symbol " + GenSymbol{level, a, b}.to_string());
    return it->second;
}

namespace {

// Level-indexed 5x5 grid of quantum operators, level 0 included.
using Grid = std::array<std::array<SparseOp, 5>, 5>;

std::vector<Grid> single_site(const Scalar& x, const Scalar& theta) {
    if (x.is_zero()) throw DomainError("Lax representation requires x != 0");
    const size_t n = 5;
    // P and K = A - I - 3/2 P on aux⊗quantum
    std::vector<Triplet> pt, at;
    for (int a : aux_labels())
        for (int b : aux_labels()) {
            size_t r = size_t(aux_row(a)) * n + size_t(aux_row(b));
            pt.push_back({r, size_t(aux_row(b)) * n + size_t(aux_row(a)), Scalar(1)});
            if (a != -b) continue;
            for (int c : aux_labels()) at.push_back({r, size_t(aux_row(c)) * n + size_t(aux_row(-c)), Scalar(1)});
        }
    SparseOp P = SparseOp::from_triplets(25, pt), A = SparseOp::from_triplets(25, at), I = SparseOp::identity(25);
    SparseOp K = A - I - Scalar::frac(3, 2) * P;
    SparseOp PK = P * K;
    // u^{-2} P Ř(u-θ) = 1 + u^{-1} C1 + u^{-2} C2, and T^{(n)} = C_n / x^n
    std::vector<SparseOp> C = {
        I,
        Scalar(-2) * theta * I + x * PK,
        theta * theta * I - theta * x * PK + (Scalar::frac(3, 2) * x * x) * P,
    };
    std::vector<Grid> out(3);
    for (int lev = 0; lev < 3; ++lev) {
        SparseOp M = pow(x, -lev) * C[size_t(lev)];
        std::array<std::array<std::vector<Triplet>, 5>, 5> blocks;
        for (size_t r = 0; r < 25; ++r) {
            auto cols = M.row_cols(r);
            auto vals = M.row_vals(r);
            for (size_t k = 0; k < cols.size(); ++k)
                blocks[r / n][cols[k] / n].push_back({r % n, cols[k] % n, vals[k]});
        }
        for (size_t p = 0; p < 5; ++p)
            for (size_t q = 0; q < 5; ++q) out[size_t(lev)][p][q] = SparseOp::from_triplets(n, blocks[p][q]);
    }
    return out;
}

LaxRep to_rep(const std::vector<Grid>& series, size_t dim, int max_level) {
    LaxRep rep;
    rep.quantum_dim = dim;
    rep.max_level = max_level;
    for (int lev = 1; lev <= max_level; ++lev)
        for (int a : aux_labels())
            for (int b : aux_labels()) {
                SparseOp m = size_t(lev) < series.size() ? series[size_t(lev)][size_t(aux_row(a))][size_t(aux_row(b))]
                                                         : SparseOp(dim);
                rep.assign.emplace(GenSymbol{lev, a, b}, std::move(m));
            }
    return rep;
}

}  // namespace

LaxRep build_lax(const Scalar& x, const Scalar& theta, int max_level) {
    return to_rep(single_site(x, theta), 5, max_level);
}

LaxRep build_monodromy(const Scalar& x, const std::vector<Scalar>& thetas, int max_level) {
    if (thetas.empty()) throw DomainError("monodromy requires at least one site");
    std::vector<Grid> acc = single_site(x, thetas[0]);
    size_t dim = 5;
    for (size_t s = 1; s < thetas.size(); ++s) {
        std::vector<Grid> site = single_site(x, thetas[s]);
        std::vector<Grid> next(acc.size() + site.size() - 1);
        for (size_t lev = 0; lev < next.size(); ++lev)
            for (size_t p = 0; p < 5; ++p)
                for (size_t q = 0; q < 5; ++q) {
                    SparseOp sum(dim * 5);
                    for (size_t k = 0; k <= lev; ++k) {
                        size_t l = lev - k;
                        if (k >= acc.size() || l >= site.size()) continue;
                        for (size_t b = 0; b < 5; ++b) sum += kron(acc[k][p][b], site[l][b][q]);
                    }
                    next[lev][p][q] = std::move(sum);
                }
        acc = std::move(next);
        dim *= 5;
    }
    return to_rep(acc, dim, max_level);
}

namespace {

struct ComponentDef {
    const char* name;
    int a, b, c, d, sign;  // (T_ab + sign·T_cd)/2
};

const std::vector<ComponentDef>& pair_defs() {
    static const std::vector<ComponentDef> defs = {
        {"E3", 2, 2, -2, -2, -1},  {"Et3", 2, 2, -2, -2, 1}, {"Up", 2, 1, -1, -2, -1}, {"Utp", 2, 1, -1, -2, 1},
        {"Ep", 2, 0, 0, -2, -1},   {"Etp", 2, 0, 0, -2, 1},  {"Vp", 2, -1, 1, -2, -1}, {"Vtp", 2, -1, 1, -2, 1},
        {"Um", 1, 2, -2, -1, -1},  {"Utm", 1, 2, -2, -1, 1}, {"F3", 1, 1, -1, -1, -1}, {"Ft3", 1, 1, -1, -1, 1},
        {"Fp", 1, 0, 0, -1, -1},   {"Ftp", 1, 0, 0, -1, 1},  {"Em", 0, 2, -2, 0, -1},  {"Etm", 0, 2, -2, 0, 1},
        {"Fm", 0, 1, -1, 0, -1},   {"Ftm", 0, 1, -1, 0, 1},  {"Vm", -1, 2, -2, 1, -1}, {"Vtm", -1, 2, -2, 1, 1},
    };
    return defs;
}

struct SingleDef {
    const char* name;
    int a, b;
};

const std::vector<SingleDef>& single_defs() {
    static const std::vector<SingleDef> defs = {{"Xp", 2, -2}, {"Xm", -2, 2}, {"Yp", 1, -1}, {"Ym", -1, 1}, {"I0", 0, 0}};
    return defs;
}

}  // namespace

const std::vector<std::string>& component_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& d : pair_defs()) n.push_back(d.name);
        for (const auto& d : single_defs()) n.push_back(d.name);
        return n;
    }();
    return names;
}

const SparseOp& ComponentSet::get(std::string_view name) const {
    auto it = named.find(name);
    if (it == named.end()) throw DomainError("unknown component " + std::string(name));
    return it->second;
}

std::map<std::pair<int, int>, SparseOp> ComponentSet::reassemble() const {
    std::map<std::pair<int, int>, SparseOp> out;
    const auto& defs = pair_defs();
    for (size_t k = 0; k < defs.size(); k += 2) {
        const auto& plain = defs[k];
        const auto& tilde = defs[k + 1];
        out[{plain.a, plain.b}] = get(plain.name) + get(tilde.name);
        out[{plain.c, plain.d}] = get(tilde.name) - get(plain.name);
    }
    for (const auto& s : single_defs()) out[{s.a, s.b}] = get(s.name);
    return out;
}

ComponentSet extract_components(const LaxRep& rep, int n) {
    if (n < 1 || n > rep.max_level)
        throw DomainError("component level " + std::to_string(n) + " outside 1.." + std::to_string(rep.max_level));
    ComponentSet cs;
    cs.level = n;
    const Scalar half = Scalar::frac(1, 2);
    for (const auto& d : pair_defs()) {
        SparseOp first = rep.T(n, d.a, d.b), second = rep.T(n, d.c, d.d);
        cs.named.emplace(d.name, half * (d.sign > 0 ? first + second : first - second));
    }
    for (const auto& s : single_defs()) cs.named.emplace(s.name, rep.T(n, s.a, s.b));
    return cs;
}

SparseOp evaluate(const FreePoly& p, const LaxRep& rep) {
    SparseOp out(rep.quantum_dim);
    for (const auto& [w, c] : p.terms()) {
        SparseOp prod = SparseOp::identity(rep.quantum_dim);
        for (const auto& g : w) prod = prod * rep.T(g.level, g.a, g.b);
        out += c * prod;
    }
    return out;
}

std::vector<CheckResult> eval_relations(const RelationSet& rs, const LaxRep& rep, const std::string& suite) {
    if (rs.max_level > rep.max_level)
        throw DomainError("relation set needs level " + std::to_string(rs.max_level) + " but representation has " +
                          std::to_string(rep.max_level));
    std::vector<CheckResult> out;
    out.reserve(rs.relations.size());
    for (const auto& r : rs.relations) out.push_back(residual_result(suite, r.label, "rtt-expansion", evaluate(r.poly, rep)));
    return out;
}

std::vector<CheckResult> check_constraints(const LaxRep& rep, const std::string& suite) {
    if (rep.max_level < 3) throw DomainError("constraint suites need max_level >= 3");
    std::vector<ComponentSet> levels;
    for (int n = 1; n <= rep.max_level; ++n) levels.push_back(extract_components(rep, n));
    SymbolResolver resolve = [&levels](std::string_view name, int level) -> SurdOp {
        if (level < 1 || size_t(level) > levels.size())
            throw DomainError("component level " + std::to_string(level) + " not available");
        return SurdOp(levels[size_t(level - 1)].get(name));
    };
    resolve = cached(resolve);
    std::vector<CheckResult> out;
    for (const char* t : {"lax-level1", "lax-level2", "lax-constraints", "lax-iterative"}) {
        auto r = check_table(relation_table(t), resolve, rep.quantum_dim, {2}, suite);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

}  // namespace yso5
