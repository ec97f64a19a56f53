#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "yso5/error.hpp"
#include "yso5/rmatrix.hpp"
#include "yso5/rtt_engine.hpp"

using namespace yso5;

namespace {

FreePoly sym(int level, int a, int b) { return FreePoly::symbol(GenSymbol{level, a, b}); }

// Block (a,c) of u^{-2} P Ř(u-θ), built from the R-matrix module.
SparseOp lax_block_oracle(const Scalar& x, const Scalar& theta, const Scalar& u, int a, int c) {
    BlockMatrices b = build_blocks(5);
    Matrix m = (pow(u, -2) * (b.P * build_rcheck_so5(x).eval(u - theta))).to_matrix();
    Matrix blk(5, 5);
    for (size_t p = 0; p < 5; ++p)
        for (size_t q = 0; q < 5; ++q) blk(p, q) = m(size_t(aux_row(a)) * 5 + p, size_t(aux_row(c)) * 5 + q);
    return SparseOp::from_matrix(blk);
}

SparseOp series_at(const LaxRep& rep, const Scalar& x, const Scalar& u, int a, int c) {
    SparseOp s(rep.quantum_dim);
    for (int n = 0; n <= rep.max_level; ++n) s += pow(x / u, n) * rep.T(n, a, c);
    return s;
}

LaxRep zero_rep(int max_level) {
    LaxRep rep;
    rep.quantum_dim = 1;
    rep.max_level = max_level;
    for (int lev = 1; lev <= max_level; ++lev)
        for (int a : aux_labels())
            for (int b : aux_labels()) rep.assign.emplace(GenSymbol{lev, a, b}, SparseOp(1));
    return rep;
}

}  // namespace

TEST_CASE("free polynomials are noncommutative and associative") {
    FreePoly a = sym(1, 2, 1), b = sym(1, 0, -1), c = sym(2, 1, 1);
    CHECK_FALSE(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(commutator(a, a).is_zero());
    CHECK((a + b - a) == b);
    FreePoly p = Scalar(3) * (a * b) - Scalar(6) * c;
    CHECK(proportional(p, Scalar(Rational(-1, 3)) * p));
    CHECK_FALSE(proportional(p, p + a));
    FreePoly n = p.normalized();
    CHECK(n.terms().begin()->second == Scalar(1));
    CHECK(n == (Scalar(7) * p).normalized());
    CHECK(GenSymbol{2, 1, -2}.to_string() == "T2[1,-2]");
    CHECK(GenSymbol{1, 2, 2} < GenSymbol{1, 1, 2});
    CHECK(GenSymbol{1, -2, -2} < GenSymbol{2, 2, 2});
}

TEST_CASE("single-site Lax operator matches the R-matrix directly") {
    Scalar x(2), theta(Rational(1, 3));
    LaxRep rep = build_lax(x, theta, 4);
    for (const Scalar& u : {Scalar(3), Scalar(Rational(-5, 2))})
        for (int a : aux_labels())
            for (int c : aux_labels()) CHECK(series_at(rep, x, u, a, c) == lax_block_oracle(x, theta, u, a, c));
    for (int a : aux_labels())
        for (int b : aux_labels()) {
            CHECK(rep.T(0, a, b) == (a == b ? SparseOp::identity(5) : SparseOp(5)));
            CHECK(rep.T(3, a, b).is_zero());
        }
    CHECK_THROWS_AS(rep.T(5, 2, 2), DomainError);
    CHECK_THROWS_AS(build_lax(Scalar(0), Scalar(0), 2), DomainError);
}

TEST_CASE("level-1 components of the single-site Lax operator") {
    LaxRep rep = build_lax(Scalar(1), Scalar(0), 3);
    ComponentSet cs = extract_components(rep, 1);
    for (const char* z : {"Xp", "Xm", "Yp", "Ym", "Utp", "Utm", "Vtp", "Vtm", "Etp", "Etm", "Ftp", "Ftm"})
        CHECK(cs.get(z).is_zero());
    CHECK(cs.get("Et3") == cs.get("I0"));
    CHECK(cs.get("Ft3") == cs.get("I0"));
    auto mult = identity_multiple(cs.get("I0"));
    REQUIRE(mult);
    CHECK(*mult == Scalar(Rational(-3, 2)));
    for (int n = 1; n <= 3; ++n) {
        ComponentSet c = extract_components(rep, n);
        CHECK(c.get("E3") == Scalar::frac(1, 2) * (rep.T(n, 2, 2) - rep.T(n, -2, -2)));
        CHECK(c.get("Xp") == rep.T(n, 2, -2));
        auto back = c.reassemble();
        CHECK(back.size() == 25);
        for (const auto& [k, v] : back) CHECK(v == rep.T(n, k.first, k.second));
    }
    CHECK(component_names().size() == 25);
    CHECK_THROWS_AS(extract_components(rep, 4), DomainError);
}

TEST_CASE("monodromy") {
    Scalar x(1);
    LaxRep one = build_monodromy(x, {Scalar(2)}, 3);
    LaxRep lax = build_lax(x, Scalar(2), 3);
    CHECK(one.assign == lax.assign);

    LaxRep a = build_lax(x, Scalar(0), 4), b = build_lax(x, Scalar(1), 4);
    LaxRep two = build_monodromy(x, {Scalar(0), Scalar(1)}, 4);
    CHECK(two.quantum_dim == 25);
    SparseOp i5 = SparseOp::identity(5);
    for (int p : aux_labels())
        for (int q : aux_labels()) {
            CHECK(two.T(1, p, q) == kron(a.T(1, p, q), i5) + kron(i5, b.T(1, p, q)));
            SparseOp t2(25);
            for (int k = 0; k <= 2; ++k)
                for (int m : aux_labels()) t2 += kron(a.T(k, p, m), b.T(2 - k, m, q));
            CHECK(two.T(2, p, q) == t2);
        }
    // the product of the two series evaluated at a point
    Scalar u(Rational(7, 2));
    for (int p : aux_labels())
        for (int q : aux_labels()) {
            SparseOp prod(25);
            for (int m : aux_labels()) prod += kron(series_at(a, x, u, p, m), series_at(b, x, u, m, q));
            CHECK(series_at(two, x, u, p, q) == prod);
        }
}

TEST_CASE("RTT expansion") {
    RelationSet rs = expand_rtt(1, 1, Scalar(1));
    CHECK(rs.max_level == 3);
    CHECK(rs.relations.size() == 3691);
    for (const auto& r : rs.relations) {
        CHECK_FALSE(r.poly.is_zero());
        CHECK(r.poly.terms().begin()->second == Scalar(1));
        CHECK(r.poly.max_level() <= std::max(r.i, r.j) + 2);
    }
    // normalised relations do not depend on x
    RelationSet rs2 = expand_rtt(1, 1, Scalar(Rational(2, 3)));
    REQUIRE(rs2.relations.size() == rs.relations.size());
    for (size_t k = 0; k < rs.relations.size(); ++k) CHECK(rs.relations[k].poly == rs2.relations[k].poly);
    CHECK(rs2.relations[0].prefactor == pow(Scalar(Rational(2, 3)), rs2.relations[0].i + rs2.relations[0].j + 2));
    CHECK_THROWS_AS(expand_rtt(0, 1, Scalar(1)), DomainError);
}

TEST_CASE("identity transfer matrix satisfies every relation") {
    RelationSet rs = expand_rtt(1, 1, Scalar(1));
    CHECK(all_pass(eval_relations(rs, zero_rep(rs.max_level), "t")));
}

TEST_CASE("relations hold in Lax and monodromy representations") {
    RelationSet rs11 = expand_rtt(1, 1, Scalar(1));
    CHECK(all_pass(eval_relations(rs11, build_lax(Scalar(1), Scalar(0), rs11.max_level), "t")));
    RelationSet rs22 = expand_rtt(2, 2, Scalar(1));
    CHECK(rs22.max_level == 4);
    CHECK(all_pass(eval_relations(rs22, build_monodromy(Scalar(1), {Scalar(0), Scalar(1)}, 4), "t")));
    CHECK_THROWS_AS(eval_relations(rs22, build_lax(Scalar(1), Scalar(0), 3), "t"), DomainError);
}

TEST_CASE("corrupted representation violates a relation") {
    RelationSet rs = expand_rtt(1, 1, Scalar(1));
    LaxRep rep = build_lax(Scalar(1), Scalar(0), rs.max_level);
    for (auto& [g, m] : rep.assign)
        if (g.level == 1) m = Scalar(2) * m;
    auto res = eval_relations(rs, rep, "t");
    CHECK(count_status(res, Status::Fail) > 0);
    for (const auto& r : res)
        if (r.failed()) CHECK(r.witness);
}

TEST_CASE("hand-coded relations equal the engine coefficients") {
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
            for (int a : aux_labels())
                for (int b : aux_labels())
                    for (int c : aux_labels())
                        for (int d : aux_labels())
                            CHECK(explicit_relation(ExplicitRelation::Mixed, n, m, a, b, c, d).normalized() ==
                                  rtt_coefficient(n, m, a, b, c, d).normalized());
}

TEST_CASE("level-one relations") {
    for (int m = 0; m <= 2; ++m)
        for (int a : aux_labels())
            for (int b : aux_labels())
                for (int c : aux_labels())
                    for (int d : aux_labels()) {
                        FreePoly left = explicit_relation(ExplicitRelation::LeftLevelOne, 0, m, a, b, c, d);
                        CHECK(left.normalized() == rtt_coefficient(-1, m, a, b, c, d).normalized());
                        CHECK(left == explicit_relation(ExplicitRelation::Mixed, -1, m, a, b, c, d));
                        CHECK(explicit_relation(ExplicitRelation::RightLevelOne, m, 0, b, a, d, c) == -left);
                    }
    // diagonal self case: [T1_22, T1_22] and the delta terms cancel
    CHECK(explicit_relation(ExplicitRelation::LeftLevelOne, 0, 1, 2, 2, 2, 2).is_zero());
    // [T1_bc, T1_ad] + T1_{-c,d}δ_{a,-b} - T1_{a,-b}δ_{c,-d} - T1_bd δ_ac + T1_ac δ_bd at (a,b,c,d) = (1,-1,2,-2)
    FreePoly expect = commutator(sym(1, -1, 2), sym(1, 1, -2)) + sym(1, -2, -2) - sym(1, 1, 1);
    FreePoly got = explicit_relation(ExplicitRelation::LeftLevelOne, 0, 1, 1, -1, 2, -2);
    CHECK(proportional(got, expect));
    CHECK_THROWS_AS(explicit_relation(ExplicitRelation::Mixed, -2, 0, 2, 2, 2, 2), DomainError);
}

TEST_CASE("hand-coded relations vanish in a monodromy representation") {
    LaxRep rep = build_monodromy(Scalar(2), {Scalar(0), Scalar(Rational(1, 2))}, 4);
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> lab(-2, 2), lev(0, 2);
    for (int t = 0; t < 200; ++t) {
        int n = lev(rng), m = lev(rng), a = lab(rng), b = lab(rng), c = lab(rng), d = lab(rng);
        CHECK(evaluate(explicit_relation(ExplicitRelation::Mixed, n, m, a, b, c, d), rep).is_zero());
    }
}

TEST_CASE("constraint tables") {
    CHECK(all_pass(check_constraints(build_lax(Scalar(1), Scalar(0), 3), "t")));
    auto two = check_constraints(build_monodromy(Scalar(1), {Scalar(0), Scalar(1)}, 3), "t");
    CHECK(count_status(two, Status::Fail) == 0);
    CHECK(count_status(two, Status::Pass) > 0);
    CHECK_THROWS_AS(check_constraints(build_lax(Scalar(1), Scalar(0), 2), "t"), DomainError);
}
