#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "yso5/drinfeld.hpp"
#include "yso5/error.hpp"
#include "yso5/rtt_engine.hpp"
#include "yso5/so5_rep.hpp"

using namespace yso5;

namespace {

// c_{lmn} = i k_{lmn} with k in {-1,0,1}, from index bookkeeping on [I_ab, I_cd].
int k_index(int l, int m, int n) {
    const auto& b = adjoint_basis();
    int a = b[l].a, bb = b[l].b, c = b[m].a, d = b[m].b;
    auto coeff_of = [&](int x, int y) {
        if (x == b[n].a && y == b[n].b) return 1;
        if (y == b[n].a && x == b[n].b) return -1;
        return 0;
    };
    return (bb == c) * coeff_of(a, d) + (a == d) * coeff_of(bb, c) - (a == c) * coeff_of(bb, d) -
           (bb == d) * coeff_of(a, c);
}

// 24·a in integers: the four factors of i multiply to 1.
std::map<std::array<int, 6>, long> a_oracle_times_24() {
    int k[10][10][10];
    for (int l = 0; l < 10; ++l)
        for (int m = 0; m < 10; ++m)
            for (int n = 0; n < 10; ++n) k[l][m][n] = k_index(l, m, n);
    std::map<std::array<int, 6>, long> out;
    for (int l = 0; l < 10; ++l)
        for (int m = 0; m < 10; ++m)
            for (int n = 0; n < 10; ++n)
                for (int al = 0; al < 10; ++al)
                    for (int be = 0; be < 10; ++be)
                        for (int ga = 0; ga < 10; ++ga) {
                            long s = 0;
                            for (int sg = 0; sg < 10; ++sg) {
                                if (!k[l][al][sg]) continue;
                                for (int ta = 0; ta < 10; ++ta) {
                                    if (!k[m][be][ta]) continue;
                                    for (int rh = 0; rh < 10; ++rh)
                                        s += long(k[l][al][sg]) * k[m][be][ta] * k[n][ga][rh] * k[sg][ta][rh];
                                }
                            }
                            if (s) out[{l, m, n, al, be, ga}] = s;
                        }
    return out;
}

StructureTensor so5_constants() { return structure_constants(build_spinor_generators(build_clifford()).gens); }

YangianPair two_site_pair() { return lax_yangian_pair(build_monodromy(Scalar(1), {Scalar(0), Scalar(1)}, 3)); }

size_t count_ref(const std::vector<CheckResult>& rs, const std::string& ref, Status s) {
    size_t n = 0;
    for (const auto& r : rs) n += r.ref == ref && r.status == s;
    return n;
}

}  // namespace

TEST_CASE("a-tensor agrees with an integer oracle") {
    ATensor a = compute_a_tensor(so5_constants());
    auto oracle = a_oracle_times_24();
    CHECK(a.nnz() == oracle.size());
    CHECK(a.nnz() == 12960);
    for (const auto& [key, v] : oracle)
        CHECK(a.at(key[0], key[1], key[2], key[3], key[4], key[5]) == Scalar(Rational(v, 24)));
    // exchanging two (index, partner) pairs flips the sign
    for (const auto& [key, v] : a.entries)
        CHECK(a.at(key[1], key[0], key[2], key[4], key[3], key[5]) == -v);
    auto sl = a.slice(0, 1, 2);
    for (const auto& [k, v] : sl) CHECK(a.at(0, 1, 2, k[0], k[1], k[2]) == v);
}

TEST_CASE("triple product") {
    AdjointOps g = build_vector_generators().gens;
    SparseOp t = triple_product(g[0], g[4], g[9]);
    CHECK(t.to_matrix() == triple_product(g[0].to_matrix(), g[4].to_matrix(), g[9].to_matrix()));
    CHECK(t == triple_product(g[9], g[0], g[4]));
}

TEST_CASE("quadruples over the generating subset") {
    auto q = default_quadruples();
    CHECK(q.size() == 256);
    CHECK(std::set<Quadruple>(q.begin(), q.end()).size() == 256);
    const auto& s = generating_subset();
    CHECK(s[0] == adjoint_position(1, 2));
    CHECK(s[3] == adjoint_position(4, 5));
}

TEST_CASE("Lax pair from the level-1 and level-2 components") {
    LaxRep rep = build_monodromy(Scalar(1), {Scalar(0), Scalar(1)}, 3);
    YangianPair yp = lax_yangian_pair(rep);
    CHECK(yp.level1.dim() == 25);
    CHECK(yp.h == Scalar(1));
    CHECK(all_pass(check_so5_closure(yp.level1, "t")));
    ComponentSet cs = extract_components(rep, 1);
    CHECK(yp.level1.get(2, 3) == cs.get("E3"));
    CHECK(yp.level1.get(1, 5) == cs.get("F3"));
    CartanWeylSet cw = to_cartan_weyl(yp.level1, Scalar(1), 1);
    CHECK(cw.e3 == SurdOp(cs.get("E3")));
    CHECK(cw.f3 == SurdOp(cs.get("F3")));
    // level 2 differs from level 1 by more than a multiple
    CHECK_FALSE(yp.level2.get(2, 3) == yp.level1.get(2, 3));
}

TEST_CASE("Drinfel'd relations hold on the two-site Lax pair") {
    StructureTensor c = so5_constants();
    ATensor a = compute_a_tensor(c);
    YangianPair yp = two_site_pair();
    auto res = check_drinfeld(yp, c, a, "t", default_quadruples());
    CHECK(res.size() == 45 + 100 + 120 + 256);
    CHECK(count_ref(res, "drinfeld-linear-I", Status::Pass) == 45);
    CHECK(count_ref(res, "drinfeld-linear-J", Status::Pass) == 100);
    CHECK(count_ref(res, "drinfeld-cubic", Status::Pass) == 120);
    CHECK(count_ref(res, "drinfeld-quartic", Status::Pass) == 256);
}

TEST_CASE("J = 0 keeps the linear relations but breaks the cubic one") {
    StructureTensor c = so5_constants();
    ATensor a = compute_a_tensor(c);
    YangianPair yp = two_site_pair();
    for (auto& op : yp.level2.ops) op = SparseOp(yp.level1.dim());
    auto res = check_drinfeld(yp, c, a, "t", {});
    CHECK(count_ref(res, "drinfeld-linear-J", Status::Pass) == 100);
    size_t fails = count_ref(res, "drinfeld-cubic", Status::Fail);
    CHECK(fails > 0);
    for (const auto& r : res)
        if (r.failed()) CHECK(r.witness);
}

TEST_CASE("J = I breaks the cubic relation") {
    StructureTensor c = so5_constants();
    ATensor a = compute_a_tensor(c);
    YangianPair yp = two_site_pair();
    yp.level2 = yp.level1;
    auto res = check_drinfeld(yp, c, a, "t", {});
    CHECK(count_ref(res, "drinfeld-linear-J", Status::Pass) == 100);
    CHECK(count_ref(res, "drinfeld-cubic", Status::Fail) > 0);
}

TEST_CASE("Serre relation on the Lax pair") {
    YangianPair yp = two_site_pair();
    SerreReport s = check_serre(yp, "t");
    CHECK_FALSE(s.lhs_zero);
    CHECK_FALSE(s.rhs_zero);
    REQUIRE(s.lambda);
    CHECK(*s.lambda == Scalar(1));
    CHECK(all_pass(s.results));
    CHECK(s.results.front().ref == "serre-adjoint");
    CHECK(s.results.size() > 1);

    // at h = 2 the same operators fit λ = 1/4
    yp.h = Scalar(2);
    SerreReport s2 = check_serre(yp, "t");
    REQUIRE(s2.lambda);
    CHECK(*s2.lambda == Scalar(Rational(1, 4)));
    CHECK(s2.results.front().failed());

    YangianPair single = lax_yangian_pair(build_lax(Scalar(1), Scalar(0), 3));
    SerreReport s1 = check_serre(single, "t");
    CHECK(all_pass(s1.results));
}

TEST_CASE("Cartan-Weyl tables on the Lax pair") {
    LaxRep rep = build_monodromy(Scalar(1), {Scalar(0), Scalar(1)}, 3);
    YangianPair yp = lax_yangian_pair(rep);
    for (const char* t : {"cw-level1", "cw-level2"}) {
        auto res = check_cw_tables(yp, t, nullptr, "t");
        CHECK(count_status(res, Status::Fail) == 0);
        CHECK(count_status(res, Status::Pass) > 0);
    }
    for (const char* t : {"rtt-level-n", "rtt-tilde"}) {
        auto res = check_cw_tables(yp, t, &rep, "t");
        CHECK(count_status(res, Status::Fail) == 0);
    }
    YangianPair bad = yp;
    bad.level2.ops[0] = Scalar(2) * bad.level2.ops[0];
    CHECK(count_status(check_cw_tables(bad, "cw-level2", nullptr, "t"), Status::Fail) > 0);
    YangianPair mismatched{build_vector_generators().gens, yp.level2, Scalar(1)};
    CHECK_THROWS_AS(check_drinfeld(mismatched, so5_constants(), ATensor{}, "t", {}), DimensionError);
}
