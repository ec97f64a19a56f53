#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "yso5/error.hpp"
#include "yso5/matrix.hpp"
#include "yso5/rational.hpp"
#include "yso5/scalar.hpp"
#include "yso5/sparse_op.hpp"
#include "yso5/surd_op.hpp"

using namespace yso5;

namespace {

Rational random_rational(std::mt19937_64& rng, long long range) {
    std::uniform_int_distribution<long long> num(-range, range), den(1, range);
    return Rational(num(rng), den(rng));
}

Scalar random_scalar(std::mt19937_64& rng, long long range = 9) {
    return Scalar(random_rational(rng, range), random_rational(rng, range));
}

Matrix random_matrix(std::mt19937_64& rng, size_t n, double density) {
    std::bernoulli_distribution keep(density);
    Matrix m(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            if (keep(rng)) m(r, c) = random_scalar(rng);
    return m;
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(0, 5).to_string() == "0/1");
    CHECK(Rational(7).to_string() == "7/1");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("3") == Rational(3));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
}

TEST_CASE("rational arithmetic agrees with GMP on random operands") {
    std::mt19937_64 rng(20240501);
    for (int k = 0; k < 2000; ++k) {
        Rational a = random_rational(rng, 1000000), b = random_rational(rng, 1000000);
        mpq_class qa = a.to_mpq(), qb = b.to_mpq();
        CHECK((a + b).to_mpq() == qa + qb);
        CHECK((a - b).to_mpq() == qa - qb);
        CHECK((a * b).to_mpq() == qa * qb);
        if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
        CHECK((a < b) == (qa < qb));
    }
}

TEST_CASE("rational overflow falls back to big values and returns") {
    Rational big((1LL << 62) + 1);
    Rational sq = big * big;
    CHECK_FALSE(sq.is_small());
    mpq_class expect = mpq_class(big.to_mpq()) * big.to_mpq();
    CHECK(sq.to_mpq() == expect);
    Rational back = sq / big;
    CHECK(back.is_small());
    CHECK(back == big);
    CHECK((sq - sq).is_zero());
    CHECK((sq - sq).is_small());
    std::mt19937_64 rng(7);
    Rational acc(1);
    mpq_class ref(1);
    for (int k = 0; k < 40; ++k) {
        Rational r = random_rational(rng, 1000003);
        if (r.is_zero()) continue;
        acc = acc * r + Rational(1, 3);
        ref = ref * r.to_mpq() + mpq_class(1, 3);
    }
    CHECK(acc.to_mpq() == ref);
}

TEST_CASE("scalar canonical strings and parsing") {
    CHECK(Scalar(Rational(1, 2)).to_string() == "1/2");
    CHECK(Scalar(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2-3/4 i");
    CHECK(Scalar::i().to_string() == "0/1+1/1 i");
    CHECK(Scalar().to_string() == "0/1");
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        Scalar s = random_scalar(rng);
        CHECK(Scalar::parse(s.to_string()) == s);
    }
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-2") == Scalar(-2));
}

TEST_CASE("scalar field laws") {
    std::mt19937_64 rng(12);
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    for (int k = 0; k < 300; ++k) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        Rational re = a.re() * b.re() - a.im() * b.im(), im = a.re() * b.im() + a.im() * b.re();
        CHECK(a * b == Scalar(re, im));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
        CHECK((a * a.conj()).is_real());
    }
    CHECK(pow(Scalar(Rational(1, 2)), -3) == Scalar(8));
    CHECK_THROWS_AS(Scalar().inverse(), DomainError);
}

TEST_CASE("matrix products, kron and shape errors") {
    std::mt19937_64 rng(13);
    Matrix a = random_matrix(rng, 4, 0.5), b = random_matrix(rng, 4, 0.5), c = random_matrix(rng, 4, 0.5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(commutator(a, b) == a * b - b * a);
    CHECK(anticommutator(a, b) == a * b + b * a);
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
    CHECK(Matrix::identity(4) * a == a);
    CHECK_THROWS_AS(mat_mul(Matrix(2, 3), Matrix(2, 3)), DimensionError);

    Matrix x = random_matrix(rng, 2, 1.0), y = random_matrix(rng, 3, 1.0);
    Matrix k = kron(x, y);
    CHECK(k.rows() == 6);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            for (size_t p = 0; p < 3; ++p)
                for (size_t q = 0; q < 3; ++q) CHECK(k(i * 3 + p, j * 3 + q) == x(i, j) * y(p, q));
    CHECK(kron(a, b) * kron(c, a) == kron(a * c, b * a));
}

TEST_CASE("sparse operators agree with dense ones") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 20; ++t) {
        Matrix a = random_matrix(rng, 7, 0.3), b = random_matrix(rng, 7, 0.3);
        SparseOp sa = SparseOp::from_matrix(a), sb = SparseOp::from_matrix(b);
        CHECK((sa * sb).to_matrix() == a * b);
        CHECK((sa + sb).to_matrix() == a + b);
        CHECK((sa - sa).is_zero());
        CHECK((sa - sa).nnz() == 0);
        CHECK(sa.adjoint().to_matrix() == a.adjoint());
        CHECK(commutator(sa, sb).to_matrix() == commutator(a, b));
        CHECK(kron(sa, sb).to_matrix() == kron(a, b));
    }
    SparseOp id = SparseOp::identity(3);
    CHECK(id.nnz() == 3);
    CHECK_THROWS_AS(SparseOp::identity(3) * SparseOp::identity(4), DimensionError);
}

TEST_CASE("first nonzero witness is the row-major first entry") {
    Matrix m(3, 3);
    m(2, 0) = Scalar(5);
    m(1, 2) = Scalar(Rational(1, 3));
    auto w = SparseOp::from_matrix(m).first_nonzero();
    REQUIRE(w);
    CHECK(w->row == 1);
    CHECK(w->col == 2);
    CHECK(w->value == Scalar(Rational(1, 3)));
    CHECK_FALSE(SparseOp(3).first_nonzero());
}

TEST_CASE("surd operators keep the sqrt2 part exact") {
    SparseOp a = SparseOp::identity(2);
    SurdOp s = SurdOp::over_sqrt2(a);  // a/√2
    SurdOp sq = s * s;                 // a²/2
    CHECK_FALSE(sq.has_root2());
    CHECK(sq.rat == Scalar(Rational(1, 2)) * a);
    CHECK((s - s).is_zero());
    auto w = (s + SurdOp(a)).first_nonzero();
    REQUIRE(w);
    CHECK(w->part == "rational");
    auto w2 = s.first_nonzero();
    REQUIRE(w2);
    CHECK(w2->part == "sqrt2");
}

TEST_CASE("commutator Jacobi identity and distributivity on random matrices") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 10; ++t) {
        Matrix a = random_matrix(rng, 4, 0.6), b = random_matrix(rng, 4, 0.6), c = random_matrix(rng, 4, 0.6);
        Matrix jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
        CHECK(jac.is_zero());
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(commutator(a, a).is_zero());
        CHECK(anticommutator(a, Matrix(4, 4)).is_zero());
    }
    CHECK(kron(Matrix::identity(5), Matrix::identity(5)) == Matrix::identity(25));
    CHECK(SparseOp::from_matrix(kron(Matrix::identity(5), Matrix::identity(5))) == SparseOp::identity(25));
}
