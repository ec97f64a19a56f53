#include "yso5/suites.hpp"

#include <functional>
#include <map>

#include "yso5/drinfeld.hpp"
#include "yso5/error.hpp"
#include "yso5/fock_chain.hpp"
#include "yso5/relation_tables.hpp"
#include "yso5/rmatrix.hpp"
#include "yso5/rtt_engine.hpp"
#include "yso5/so5_rep.hpp"

namespace yso5 {

namespace {

void append(std::vector<CheckResult>& out, std::vector<CheckResult> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::string order_name(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

std::string entry_name(int a, int b, int c, int d) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," + std::to_string(d) +
           ")";
}

// One result per index family: pass iff every entry tuple agrees.
CheckResult symbolic_family(const std::string& suite, const std::string& check, const std::string& ref,
                            const std::function<std::pair<FreePoly, FreePoly>(int, int, int, int)>& pair) {
    CheckResult r{suite, check, ref, Status::Pass, std::nullopt, {}};
    size_t compared = 0, nonzero = 0;
    for (int a : aux_labels())
        for (int b : aux_labels())
            for (int c : aux_labels())
                for (int d : aux_labels()) {
                    auto [lhs, rhs] = pair(a, b, c, d);
                    ++compared;
                    if (!lhs.is_zero()) ++nonzero;
                    if (r.status == Status::Pass && !(lhs.normalized() == rhs.normalized())) {
                        r.status = Status::Fail;
                        r.witness = CheckWitness{entry_name(a, b, c, d), "not proportional"};
                    }
                }
    r.metrics.emplace_back("tuples", std::to_string(compared));
    r.metrics.emplace_back("nonzero", std::to_string(nonzero));
    return r;
}

LaxRep make_lax(const SuiteOptions& o, int max_level) {
    if (o.sites < 1) throw DomainError("--sites must be at least 1");
    if (o.thetas.size() < size_t(o.sites))
        throw DomainError("--thetas needs " + std::to_string(o.sites) + " values, got " +
                          std::to_string(o.thetas.size()));
    if (o.sites == 1) return build_lax(o.x, o.thetas[0], max_level);
    return build_monodromy(o.x, std::vector<Scalar>(o.thetas.begin(), o.thetas.begin() + o.sites), max_level);
}

std::string join_scalars(const std::vector<Scalar>& v) {
    std::string s;
    for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].to_string();
    return s;
}

}  // namespace

std::vector<CheckResult> run_so5_suite(const SuiteOptions&) {
    std::vector<CheckResult> out;
    const GeneratorSet spinor = build_spinor_generators(build_clifford());
    const GeneratorSet vector = build_vector_generators();
    for (const auto& [name, g] : {std::pair<std::string, const GeneratorSet&>{"so5/spinor", spinor},
                                  std::pair<std::string, const GeneratorSet&>{"so5/vector", vector}}) {
        append(out, check_so5_closure(g.gens, name));
        YangianPair yp{g.gens, g.gens, Scalar(1)};
        append(out, check_cw_tables(yp, "cw-level1", nullptr, name));
    }
    return out;
}

std::vector<CheckResult> run_ybe_suite(const SuiteOptions& o) {
    RCheckPoly r = build_rcheck(o.N, o.x);
    YbeReport rep = ybe_check(r, square_grid(o.grid));
    std::vector<CheckResult> out;
    const std::string suite = "ybe/N" + std::to_string(o.N);
    for (const auto& p : rep.points) {
        CheckResult c{suite, "u=" + p.u.to_string() + " v=" + p.v.to_string(), "yang-baxter",
                      p.pass ? Status::Pass : Status::Fail, std::nullopt, {}};
        if (p.witness) c.witness = make_witness(*p.witness);
        out.push_back(std::move(c));
    }
    if (o.N == 5) {
        RCheckPoly d = build_rcheck_so5(o.x);
        out.push_back(residual_result(suite, "direct form u^2", "yang-baxter", r.coeff2 - d.coeff2));
        out.push_back(residual_result(suite, "direct form u^1", "yang-baxter", r.coeff1 - d.coeff1));
        out.push_back(residual_result(suite, "direct form u^0", "yang-baxter", r.coeff0 - d.coeff0));
    }
    CheckResult u{suite, "unitarity", "yang-baxter", Status::Measured, std::nullopt, {}};
    if (auto poly = unitarity_polynomial(r)) {
        std::string s;
        for (size_t k = 0; k < poly->size(); ++k) s += (k ? "," : "") + (*poly)[k].to_string();
        u.metrics.emplace_back("coefficients_u0_to_u4", s);
    } else {
        u.metrics.emplace_back("coefficients_u0_to_u4", "not scalar");
    }
    out.push_back(std::move(u));
    return out;
}

std::vector<CheckResult> run_rtt_suite(const SuiteOptions& o) {
    if (o.levels < 0) throw DomainError("--levels must be non-negative");
    std::vector<CheckResult> out;
    const std::string suite = "rtt";
    RelationSet rs = expand_rtt(1, o.levels, o.x);
    LaxRep rep = make_lax(o, std::max(3, rs.max_level));

    std::map<std::pair<int, int>, std::vector<const Relation*>> by_order;
    for (const auto& r : rs.relations) by_order[{r.i, r.j}].push_back(&r);
    for (const auto& [ord, rels] : by_order) {
        CheckResult c{suite, "expansion order " + order_name(ord.first, ord.second), "rtt-expansion", Status::Pass,
                      std::nullopt, {}};
        for (const Relation* r : rels) {
            SparseOp res = evaluate(r->poly, rep);
            if (auto w = res.first_nonzero()) {
                c.status = Status::Fail;
                c.witness = make_witness(*w);
                c.metrics.emplace_back("first_failure", r->label);
                break;
            }
        }
        c.metrics.emplace_back("relations", std::to_string(rels.size()));
        out.push_back(std::move(c));
    }

    for (int n = 0; n <= o.levels; ++n)
        for (int m = 0; m <= o.levels; ++m)
            out.push_back(symbolic_family(suite, "symbolic mixed " + order_name(n, m), "rtt-symbolic",
                                          [n, m](int a, int b, int c, int d) {
                                              return std::make_pair(explicit_relation(ExplicitRelation::Mixed, n, m, a, b, c, d),
                                                                    rtt_coefficient(n, m, a, b, c, d));
                                          }));
    for (int m = 0; m <= o.levels; ++m) {
        out.push_back(symbolic_family(suite, "symbolic left level-one m=" + std::to_string(m), "rtt-symbolic",
                                      [m](int a, int b, int c, int d) {
                                          return std::make_pair(explicit_relation(ExplicitRelation::LeftLevelOne, 0, m, a, b, c, d),
                                                                rtt_coefficient(-1, m, a, b, c, d));
                                      }));
        out.push_back(symbolic_family(suite, "symbolic right level-one n=" + std::to_string(m), "rtt-symbolic",
                                      [m](int a, int b, int c, int d) {
                                          return std::make_pair(explicit_relation(ExplicitRelation::RightLevelOne, m, 0, a, b, c, d),
                                                                explicit_relation(ExplicitRelation::LeftLevelOne, 0, m, b, a, d, c));
                                      }));
    }

    append(out, check_constraints(rep, suite));
    YangianPair unused;
    for (const char* t : {"rtt-level-n", "rtt-tilde"}) append(out, check_cw_tables(unused, t, &rep, suite, {1, 2}));

    CheckResult cfg{suite, "representation", "lax-representation", Status::Measured, std::nullopt, {}};
    cfg.metrics.emplace_back("sites", std::to_string(o.sites));
    cfg.metrics.emplace_back("thetas", join_scalars(std::vector<Scalar>(o.thetas.begin(), o.thetas.begin() + o.sites)));
    cfg.metrics.emplace_back("quantum_dim", std::to_string(rep.quantum_dim));
    cfg.metrics.emplace_back("relations", std::to_string(rs.relations.size()));
    out.push_back(std::move(cfg));
    return out;
}

std::vector<CheckResult> run_drinfeld_suite(const SuiteOptions& o) {
    std::vector<CheckResult> out;
    const StructureTensor c = structure_constants(build_spinor_generators(build_clifford()).gens);
    const ATensor a = compute_a_tensor(c);

    if (o.source == "lax") {
        const std::string suite = "drinfeld/lax";
        LaxRep rep = make_lax(o, 3);
        YangianPair yp = lax_yangian_pair(rep);
        if (o.h) yp.h = *o.h;
        CheckResult m{suite, "affine matching", "lax-matching", Status::Measured, std::nullopt, {}};
        m.metrics.emplace_back("I", "Phi(T1 components)");
        m.metrics.emplace_back("J", "Phi(T2 components)");
        m.metrics.emplace_back("scale", "1");
        m.metrics.emplace_back("shift", "0");
        m.metrics.emplace_back("h", yp.h.to_string());
        out.push_back(std::move(m));
        append(out, check_drinfeld(yp, c, a, suite, default_quadruples()));
        SerreReport s = check_serre(yp, suite);
        append(out, std::move(s.results));
        for (const auto& t : o.tables)
            if (t != "cw-cubic") append(out, check_cw_tables(yp, t, &rep, suite));
        return out;
    }
    if (o.source == "fock") {
        const std::string suite = "drinfeld/fock";
        ChainConfig cfg{o.L, o.c, o.h.value_or(o.c), o.weights, o.allow_large};
        FermionOps f = build_fermions(cfg);
        LatticeYangian ly = build_local_density(f, build_clifford());
        build_level2(f, cfg, ly);
        YangianPair yp{ly.level1, ly.level2, cfg.h};
        append(out, check_drinfeld(yp, c, a, suite, default_quadruples()));
        SerreReport s = check_serre(yp, suite);
        append(out, std::move(s.results));
        for (const auto& t : o.tables)
            if (t != "cw-cubic" && t != "rtt-level-n" && t != "rtt-tilde")
                append(out, check_cw_tables(yp, t, nullptr, suite));
        return out;
    }
    throw DomainError("unknown --source '" + o.source + "' (expected lax or fock)");
}

std::vector<CheckResult> run_fock_suite(const SuiteOptions& o) {
    ChainConfig cfg{o.L, o.c, o.h.value_or(o.c), o.weights, o.allow_large};
    require_budget(cfg.L, cfg.allow_large);
    const std::string suite = "fock/L" + std::to_string(cfg.L);
    FermionOps f = build_fermions(cfg);
    LatticeYangian ly = build_local_density(f, build_clifford());
    build_level2(f, cfg, ly);
    std::vector<CheckResult> out = check_car(f, suite);
    append(out, check_parity(f, ly, suite));
    append(out, verify_chain(ly, cfg, suite).results);
    return out;
}

std::vector<CheckResult> run_all_suites(const SuiteOptions& o) {
    std::vector<CheckResult> out = run_so5_suite(o);
    append(out, run_ybe_suite(o));
    append(out, run_rtt_suite(o));
    SuiteOptions lax = o;
    lax.source = "lax";
    append(out, run_drinfeld_suite(lax));
    append(out, run_fock_suite(o));
    return out;
}

}  // namespace yso5
