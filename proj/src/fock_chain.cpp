#include "yso5/fock_chain.hpp"

#include <bit>
#include <cstdlib>

#include "yso5/error.hpp"

namespace yso5 {

namespace {

constexpr uint64_t kDefaultBudgetMb = 1024;
constexpr uint64_t kEntriesPerRow = 48;
constexpr uint64_t kBytesPerEntry = 80;

uint64_t budget_mb() {
    if (const char* env = std::getenv("YSO5_MEM_BUDGET_MB")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return kDefaultBudgetMb;
}

}  // namespace

BudgetEstimate estimate_budget(int L, bool allow_large) {
    BudgetEstimate b;
    if (L < 1) throw DomainError("chain length must be at least 1");
    b.budget_bytes = budget_mb() << 20;
    int cap = allow_large ? 4 : 3;
    if (L > 8) {
        b.dim = 0;
        b.bytes = UINT64_MAX;
    } else {
        b.dim = size_t(1) << (4 * L);
        b.bytes = uint64_t(b.dim) * kEntriesPerRow * kBytesPerEntry;
    }
    b.admitted = L <= cap && b.bytes <= b.budget_bytes;
    std::string dim = L > 8 ? "16^" + std::to_string(L) : std::to_string(b.dim);
    if (b.admitted) {
        b.message = "L=" + std::to_string(L) + " admitted: dimension " + dim;
    } else if (L > cap) {
        b.message = "memory budget exceeded: L=" + std::to_string(L) + " needs Fock dimension " + dim +
                    "; the limit is L<=" + std::to_string(cap) + (allow_large ? "" : " (use --allow-large for L=4)");
    } else {
        b.message = "memory budget exceeded: L=" + std::to_string(L) + " needs Fock dimension " + dim + ", about " +
                    std::to_string(b.bytes >> 20) + " MB against a budget of " + std::to_string(b.budget_bytes >> 20) +
                    " MB (YSO5_MEM_BUDGET_MB)";
    }
    return b;
}

void require_budget(int L, bool allow_large) {
    BudgetEstimate b = estimate_budget(L, allow_large);
    if (!b.admitted) throw BudgetError(b.message);
}

FermionOps build_fermions(const ChainConfig& cfg) {
    require_budget(cfg.L, cfg.allow_large);
    FermionOps f;
    f.L = cfg.L;
    const size_t modes = size_t(4 * cfg.L);
    const size_t dim = size_t(1) << modes;
    for (size_t k = 0; k < modes; ++k) {
        std::vector<Triplet> t;
        t.reserve(dim / 2);
        const size_t bit = size_t(1) << k;
        for (size_t s = 0; s < dim; ++s) {
            if (!(s & bit)) continue;
            int sign = (std::popcount(s & (bit - 1)) % 2) ? -1 : 1;
            t.push_back({s ^ bit, s, Scalar(sign)});
        }
        SparseOp a = SparseOp::from_triplets(dim, std::move(t));
        f.psi_dagger.push_back(a.adjoint());
        f.psi.push_back(std::move(a));
    }
    return f;
}

SparseOp parity_operator(const FermionOps& f) {
    std::vector<Triplet> t;
    for (size_t s = 0; s < f.dim(); ++s) t.push_back({s, s, Scalar(std::popcount(s) % 2 ? -1 : 1)});
    return SparseOp::from_triplets(f.dim(), std::move(t));
}

LatticeYangian build_local_density(const FermionOps& f, const CliffordSet& cs) {
    GeneratorSet g = build_spinor_generators(cs);
    LatticeYangian ly;
    ly.L = f.L;
    for (size_t k = 0; k < 10; ++k) ly.level1.ops[k] = SparseOp(f.dim());
    for (int x = 1; x <= f.L; ++x) {
        AdjointOps local;
        for (size_t k = 0; k < 10; ++k) {
            SparseOp op(f.dim());
            const SparseOp& gk = g.gens[k];
            for (size_t al = 0; al < 4; ++al) {
                auto cols = gk.row_cols(al);
                auto vals = gk.row_vals(al);
                for (size_t e = 0; e < cols.size(); ++e)
                    op += vals[e] * (f.creator(x, int(al) + 1) * f.annihilator(x, int(cols[e]) + 1));
            }
            ly.level1.ops[k] += op;
            local.ops[k] = std::move(op);
        }
        ly.local_density.push_back(std::move(local));
    }
    return ly;
}

void build_level2(const FermionOps& f, const ChainConfig& cfg, LatticeYangian& ly) {
    if (cfg.one_body_weights && int(cfg.one_body_weights->size()) != ly.L)
        throw DimensionError("one-body weights: expected " + std::to_string(ly.L) + " values, got " +
                             std::to_string(cfg.one_body_weights->size()));
    const Scalar pref = Scalar(Rational(0), Rational(-1, 2)) * cfg.c;
    const auto& basis = adjoint_basis();
    for (size_t k = 0; k < 10; ++k) {
        int a = basis[k].a, b = basis[k].b;
        SparseOp bilocal(f.dim());
        if (!cfg.c.is_zero())
            for (int x = 1; x <= ly.L; ++x)
                for (int y = 1; y <= ly.L; ++y) {
                    if (x == y) continue;
                    SparseOp sum(f.dim());
                    for (int c = 1; c <= 5; ++c) {
                        if (c == a || c == b) continue;
                        sum += ly.local_density[size_t(x - 1)].get(a, c) * ly.local_density[size_t(y - 1)].get(c, b);
                    }
                    bilocal = x > y ? bilocal + sum : bilocal - sum;
                }
        SparseOp j = pref * bilocal;
        if (cfg.one_body_weights)
            for (int x = 1; x <= ly.L; ++x)
                j += (*cfg.one_body_weights)[size_t(x - 1)] * ly.local_density[size_t(x - 1)][k];
        ly.level2.ops[k] = std::move(j);
    }
}

std::vector<CheckResult> check_car(const FermionOps& f, const std::string& suite) {
    std::vector<CheckResult> out;
    const SparseOp id = SparseOp::identity(f.dim());
    const SparseOp zero(f.dim());
    auto name = [](size_t k) {
        return std::to_string(k / 4 + 1) + "." + std::to_string(k % 4 + 1);
    };
    for (size_t p = 0; p < f.psi.size(); ++p)
        for (size_t q = 0; q < f.psi.size(); ++q) {
            out.push_back(residual_result(suite, "{psi" + name(p) + ",psi" + name(q) + "}", "car",
                                          anticommutator(f.psi[p], f.psi[q])));
            out.push_back(residual_result(suite, "{psi" + name(p) + ",psidag" + name(q) + "}", "car",
                                          anticommutator(f.psi[p], f.psi_dagger[q]) - (p == q ? id : zero)));
        }
    return out;
}

std::vector<CheckResult> check_parity(const FermionOps& f, const LatticeYangian& ly, const std::string& suite) {
    SparseOp par = parity_operator(f);
    std::vector<CheckResult> out;
    const auto& basis = adjoint_basis();
    for (size_t k = 0; k < 10; ++k) {
        std::string lab = basis[k].label();
        out.push_back(residual_result(suite, "parity " + lab, "parity", commutator(par, ly.level1[k])));
        out.push_back(residual_result(suite, "parity J" + lab.substr(1), "parity", commutator(par, ly.level2[k])));
    }
    return out;
}

std::vector<CheckResult> check_covariance(const AdjointOps& I, const AdjointOps& J, const std::string& suite) {
    std::vector<CheckResult> out;
    const auto& basis = adjoint_basis();
    for (const auto& p : basis)
        for (const auto& q : basis)
            out.push_back(residual_result(suite, "[" + p.label() + ",J" + q.label().substr(1) + "]",
                                          "adjoint-covariance", adjoint_residual(I, J, p, q)));
    return out;
}

ChainReport verify_chain(const LatticeYangian& ly, const ChainConfig& cfg, const std::string& suite) {
    ChainReport rep;
    auto append = [&rep](std::vector<CheckResult> v) {
        rep.results.insert(rep.results.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    };
    append(check_so5_closure(ly.level1, suite));
    append(check_covariance(ly.level1, ly.level2, suite));

    YangianPair yp{ly.level1, ly.level2, cfg.h};
    SerreReport serre = check_serre(yp, suite);
    rep.lambda = serre.lambda;
    if (!serre.results.empty() && rep.lambda && !cfg.c.is_zero())
        serre.results.front().metrics.emplace_back("fitted_lambda_at_h1_over_c2",
                                                   (*rep.lambda * cfg.h * cfg.h / (cfg.c * cfg.c)).to_string());
    append(std::move(serre.results));
    append(check_cw_tables(yp, "cw-level1", nullptr, suite));
    append(check_cw_tables(yp, "cw-level2", nullptr, suite));
    return rep;
}

}  // namespace yso5
