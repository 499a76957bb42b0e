#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arrmorse/linalg.hpp"

using namespace arrmorse;

TEST_CASE("rational arithmetic is exact") {
    Scalar a = Scalar::rational(1, 3);
    Scalar b = Scalar::rational(1, 6);
    CHECK((a + b) == Scalar::rational(1, 2));
    CHECK((a - b) == Scalar::rational(1, 6));
    CHECK((a * b) == Scalar::rational(1, 18));
    CHECK((a / b) == Scalar(2));
    CHECK((a - a).is_zero());
    Scalar s;
    for (int i = 0; i < 10; ++i) s += Scalar::rational(1, 10);
    CHECK(s == Scalar(1));
}

TEST_CASE("quadratic extension arithmetic and signs") {
    Scalar r2 = Scalar::sqrt_term(1, 2);
    CHECK((r2 * r2) == Scalar(2));
    CHECK(r2.sign() == 1);
    CHECK((-r2).sign() == -1);
    // 3/2 - sqrt(2) > 0 is false: 9/4 < 2? no, 9/4 = 2.25 > 2, so positive
    Scalar x = Scalar::rational(3, 2) - r2;
    CHECK(x.sign() == 1);
    // 7/5 - sqrt(2) < 0 (49/25 < 2)
    Scalar y = Scalar::rational(7, 5) - r2;
    CHECK(y.sign() == -1);
    // (1+sqrt5)/2 satisfies phi^2 = phi + 1
    Scalar phi(mpq_class(1, 2), mpq_class(1, 2), 5);
    CHECK(phi * phi == phi + Scalar(1));
    CHECK((Scalar(1) / phi) == phi - Scalar(1));
    CHECK_THROWS(Scalar::sqrt_term(1, 2) + Scalar::sqrt_term(1, 3));
}

TEST_CASE("rationals embed into any extension") {
    Scalar r5 = Scalar::sqrt_term(1, 5);
    Scalar q = Scalar::rational(-7, 3);
    Scalar sum = q + r5;
    CHECK(sum.radicand() == 5);
    CHECK((sum - r5) == q);
}

TEST_CASE("string round trip") {
    std::vector<std::string> cases = {"0",           "5",         "-3/7",
                                      "1/2+1/2*sqrt(5)", "-2/3*sqrt(2)", "4-3*sqrt(3)"};
    for (const auto& s : cases) {
        Scalar v = Scalar::parse(s);
        CHECK(Scalar::parse(v.str()) == v);
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        long p = (long)(rng() % 2001) - 1000, q = 1 + (long)(rng() % 40);
        long bp = (long)(rng() % 2001) - 1000, bq = 1 + (long)(rng() % 40);
        Scalar v(mpq_class(p, q), mpq_class(bp, bq), 5);
        CHECK(Scalar::parse(v.str()) == v);
    }
}

TEST_CASE("linear algebra over the exact field") {
    Matrix a = {{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(-1)}};
    auto x = solve(a, {Scalar(5), Scalar(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(2));
    CHECK((*x)[1] == Scalar(1));
    CHECK(rank(a) == 2);

    Matrix sing = {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
    CHECK(rank(sing) == 1);
    auto ns = nullspace(sing);
    REQUIRE(ns.size() == 1);
    CHECK(dot(sing[0], ns[0]).is_zero());
    CHECK_FALSE(solve(sing, {Scalar(1), Scalar(3)}).has_value());
}

TEST_CASE("affine subspaces round intrinsic coordinates") {
    AffineSubspace s;
    s.origin = {Scalar(1), Scalar(2), Scalar(3)};
    s.basis = {{Scalar(1), Scalar(0), Scalar(1)}, {Scalar(0), Scalar(1), Scalar(-1)}};
    Vector t = {Scalar(2), Scalar(-1)};
    Vector x = s.from_intrinsic(t);
    auto back = s.to_intrinsic(x);
    REQUIRE(back.has_value());
    CHECK(vec_is_zero(sub(*back, t)));
    CHECK_FALSE(s.to_intrinsic({Scalar(0), Scalar(0), Scalar(100)}).has_value());
}
