#include "toric/field.hpp"

#include "doctest.h"

#include <random>

using namespace toric;

TEST_CASE("prime field GF(5) has generator 2") {
    GaloisField f(5, 1);
    CHECK(f.q() == 5);
    CHECK(f.generator().enc == 2);
    CHECK(f.mul(f.element(2), f.element(3)) == f.one());
}

TEST_CASE("GF(8) uses the low-degree-first smallest irreducible cubic") {
    GaloisField f(2, 3);
    // The two irreducible cubics over GF(2) are 1+x+x^3 and 1+x^2+x^3;
    // compared low-degree first the latter is smaller.
    CHECK(f.modulus() == std::vector<int>{1, 0, 1, 1});
    CHECK(f.generator().enc == 2);
    FieldElement g = f.generator();
    CHECK(f.mul(g, f.pow(g, 6)) == f.one());
}

TEST_CASE("GF(2) is the trivial torus field") {
    GaloisField f(2, 1);
    CHECK(f.generator().enc == 1);
    CHECK(f.q() == 2);
}

TEST_CASE("field construction rejects bad input") {
    CHECK_THROWS_AS(GaloisField(6, 1), input_error);
    CHECK_THROWS_AS(GaloisField(1, 1), input_error);
    CHECK_THROWS_AS(GaloisField(257, 1), guard_error);
    CHECK_THROWS_AS(GaloisField(2, 0), input_error);
}

TEST_CASE("x^(q-1) = 1 for nonzero x, and inversion") {
    for (auto [p, m] : {std::pair<long long, int>{3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
        GaloisField f(p, m);
        for (long long e = 1; e < f.q(); ++e) {
            FieldElement x = f.element(e);
            CHECK(f.pow(x, f.q() - 1) == f.one());
            CHECK(f.mul(x, f.inv(x)) == f.one());
        }
    }
    GaloisField f(5, 1);
    CHECK_THROWS_AS(f.inv(f.zero()), input_error);
    CHECK_THROWS_AS(f.pow(f.zero(), -1), input_error);
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937 rng(5);
    for (auto [p, m] : {std::pair<long long, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
        GaloisField f(p, m);
        for (int i = 0; i < 60; ++i) {
            FieldElement a = f.element(static_cast<long long>(rng() % f.q()));
            FieldElement b = f.element(static_cast<long long>(rng() % f.q()));
            FieldElement c = f.element(static_cast<long long>(rng() % f.q()));
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == f.zero());
            CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
        }
    }
}

TEST_CASE("exp and log are mutually inverse") {
    GaloisField f(3, 2);
    for (long long e = 0; e < f.q() - 1; ++e) CHECK(f.log(f.exp(e)) == e);
    for (long long enc = 1; enc < f.q(); ++enc) CHECK(f.exp(f.log(f.element(enc))) == f.element(enc));
}

TEST_CASE("torus enumeration order and sizes") {
    GaloisField f3(3, 1);
    auto pts = torus_points(f3, 2);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].logs == std::vector<int>{0, 0});
    CHECK(pts[1].logs == std::vector<int>{0, 1});
    CHECK(pts[2].logs == std::vector<int>{1, 0});
    CHECK(pts[3].logs == std::vector<int>{1, 1});

    GaloisField f5(5, 1);
    CHECK(torus_points(f5, 2).size() == 16);

    GaloisField f2(2, 1);
    CHECK(torus_points(f2, 3).size() == 1);

    Guards tight;
    tight.max_torus_points = 8;
    CHECK_THROWS_AS(torus_size(f5, 2, tight), guard_error);
}

TEST_CASE("eval_monomial examples") {
    GaloisField f(5, 1);
    LatticePoint zero{Int(0), Int(0)};
    for (const auto& t : torus_points(f, 2)) CHECK(eval_monomial(f, zero, t) == f.one());

    TorusPoint t{{1, 1}};
    LatticePoint u{Int(1), Int(1)};
    CHECK(eval_monomial(f, u, t).enc == 4);  // g = 2, g^2 = 4
}

TEST_CASE("eval_monomial reduces exponents modulo q-1") {
    GaloisField f(5, 1);
    std::mt19937 rng(9);
    for (int i = 0; i < 30; ++i) {
        LatticePoint u{Int(static_cast<int>(rng() % 13) - 6), Int(static_cast<int>(rng() % 13) - 6)};
        LatticePoint shifted = u;
        shifted[0] += f.q() - 1;
        for (const auto& t : torus_points(f, 2)) {
            CHECK(eval_monomial(f, u, t) == eval_monomial(f, shifted, t));
            CHECK(eval_monomial(f, u, t).enc != 0);
        }
    }
}

TEST_CASE("gf_rank and echelon membership") {
    GaloisField f(3, 1);
    // rows (1,1,1), (0,1,2), (1,2,0): third = first + second
    std::vector<FieldElement> rows = {f.element(1), f.element(1), f.element(1),
                                      f.element(0), f.element(1), f.element(2),
                                      f.element(1), f.element(2), f.element(0)};
    CHECK(gf_rank(f, rows, 3, 3) == 2);

    GfEchelon ech(f, 3);
    ech.insert({f.element(1), f.element(1), f.element(1)});
    ech.insert({f.element(0), f.element(1), f.element(2)});
    CHECK(ech.rank() == 2);
    CHECK(ech.contains({f.element(1), f.element(2), f.element(0)}));
    CHECK(!ech.contains({f.element(1), f.element(0), f.element(1)}));
}

TEST_CASE("factor_prime_power") {
    CHECK(factor_prime_power(8) == std::pair<long long, int>{2, 3});
    CHECK(factor_prime_power(9) == std::pair<long long, int>{3, 2});
    CHECK(factor_prime_power(5) == std::pair<long long, int>{5, 1});
    CHECK_THROWS_AS(factor_prime_power(12), input_error);
    CHECK_THROWS_AS(factor_prime_power(1), input_error);
}
