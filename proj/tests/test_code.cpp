#include "toric/code.hpp"

#include "doctest.h"

#include <random>

using namespace toric;

namespace {

LatticePoint pt(std::initializer_list<long long> xs) {
    LatticePoint p;
    for (long long x : xs) p.emplace_back(x);
    return p;
}

LatticePolytope poly(std::initializer_list<std::initializer_list<long long>> pts) {
    std::vector<LatticePoint> v;
    for (auto& p : pts) v.push_back(pt(p));
    return LatticePolytope(std::move(v));
}

LatticePolytope box2(long long b1, long long b2) {
    return poly({{0, 0}, {b1, 0}, {b1, b2}, {0, b2}});
}

}  // namespace

TEST_CASE("reduce_exponent examples") {
    CHECK(reduce_exponent(pt({5, 2}), 5) == pt({1, 2}));
    CHECK(reduce_exponent(pt({4, 4}), 5) == pt({0, 0}));
    CHECK(reduce_exponent(pt({-1, 0}), 3) == pt({1, 0}));
}

TEST_CASE("reduced_set of a small box is all singletons") {
    auto classes = reduced_set(box2(1, 2), 5);
    CHECK(classes.size() == 2 * 3);
    for (const auto& cls : classes) CHECK(cls.sources.size() == 1);
}

TEST_CASE("reduced_set groups colliding exponents") {
    auto classes = reduced_set(std::vector<LatticePoint>{pt({0, 0}), pt({4, 0})}, 5);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].c == pt({0, 0}));
    CHECK(classes[0].sources.size() == 2);
}

TEST_CASE("reduced_set counts the hexagon classes") {
    auto hex = poly({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
    CHECK(reduced_set(hex, 5).size() == 3 + 3 + 1);
}

TEST_CASE("kernel_basis examples and rank-nullity") {
    CHECK(kernel_basis(box2(1, 2), 5).pairs.empty());

    auto basis = kernel_basis(std::vector<LatticePoint>{pt({0, 0}), pt({4, 0})}, 5);
    REQUIRE(basis.pairs.size() == 1);
    CHECK(basis.pairs[0].first == pt({4, 0}));
    CHECK(basis.pairs[0].second == pt({0, 0}));

    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        std::vector<LatticePoint> pts;
        for (int j = 0; j < 8; ++j)
            pts.push_back(pt({static_cast<long long>(rng() % 9), static_cast<long long>(rng() % 9)}));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        auto classes = reduced_set(pts, 5);
        auto pairs = kernel_basis(pts, 5);
        CHECK(pairs.pairs.size() + classes.size() == pts.size());
    }
}

TEST_CASE("injectivity_check examples") {
    CHECK(injectivity_check(box2(1, 2), 5));
    CHECK(!injectivity_check(box2(4, 1), 5));
    CHECK(injectivity_check(LatticePolytope({pt({0, 0})}), 5));
}

TEST_CASE("build_code of the unit square over GF(3)") {
    GaloisField f(3, 1);
    auto code = build_code(box2(1, 1), f);
    CHECK(code.n() == 4);
    CHECK(code.k() == 4);
    // rows indexed by c in lex order: (0,0), (0,1), (1,0), (1,1)
    std::vector<std::vector<int>> expect = {
        {1, 1, 1, 1}, {1, 2, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 1}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(code.at(i, j).enc == expect[i][j]);
}

TEST_CASE("build_code of a single point is the repetition code") {
    GaloisField f(5, 1);
    auto code = build_code(LatticePolytope({pt({0, 0})}), f);
    CHECK(code.k() == 1);
    for (long long j = 0; j < code.n(); ++j) CHECK(code.at(0, j) == f.one());
}

TEST_CASE("build_code box(1,2) over GF(5)") {
    GaloisField f(5, 1);
    auto code = build_code(box2(1, 2), f);
    CHECK(code.n() == 16);
    CHECK(code.k() == 6);
}

TEST_CASE("build_code rejects dimension 1") {
    GaloisField f(3, 1);
    CHECK_THROWS_AS(build_code(LatticePolytope({pt({0}), pt({2})}), f), input_error);
}

TEST_CASE("generator entries are never zero and evaluation respects reduction") {
    GaloisField f(5, 1);
    auto p = box2(4, 2);  // collisions present
    auto code = build_code(p, f);
    for (long long i = 0; i < code.k(); ++i)
        for (long long j = 0; j < code.n(); ++j) CHECK(code.at(i, j).enc != 0);

    auto pts = lattice_points(p);
    auto torus = torus_points(f, 2);
    for (const auto& u : pts) {
        auto c = reduce_exponent(u, f.q());
        for (const auto& t : torus) CHECK(eval_monomial(f, u, t) == eval_monomial(f, c, t));
    }
}

TEST_CASE("codes of P and of hull(reduced(P)) share the reduced set") {
    // A box translated by a multiple of q-1 reduces onto the same classes.
    GaloisField f(5, 1);
    auto p = box2(1, 2);
    std::vector<LatticePoint> moved;
    for (const auto& v : p.vertices()) {
        LatticePoint w = v;
        w[0] += 4;
        w[1] += 8;
        moved.push_back(w);
    }
    auto q = LatticePolytope(std::move(moved));
    auto reps = [](const std::vector<ReducedExponent>& classes) {
        std::vector<LatticePoint> cs;
        for (const auto& cls : classes) cs.push_back(cls.c);
        return cs;
    };
    CHECK(reps(reduced_set(p, f.q())) == reps(reduced_set(q, f.q())));
    auto ca = build_code(p, f);
    auto cb = build_code(q, f);
    CHECK(ca.generator() == cb.generator());
}

TEST_CASE("generator matrices are reproducible") {
    auto a = build_code(box2(1, 1), GaloisField(2, 2));
    auto b = build_code(box2(1, 1), GaloisField(2, 2));
    CHECK(a.generator() == b.generator());
}

TEST_CASE("multicyclic_check holds for built codes") {
    GaloisField f5(5, 1);
    CHECK(multicyclic_check(build_code(LatticePolytope({pt({0, 0})}), f5)));  // repetition
    GaloisField f3(3, 1);
    CHECK(multicyclic_check(build_code(box2(1, 1), f3)));  // full space
    auto hex = poly({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
    CHECK(multicyclic_check(build_code(hex, f5)));
    GaloisField f8(2, 3);
    CHECK(multicyclic_check(build_code(poly({{0, 0}, {1, 1}, {0, 2}}), f8)));
}
