#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "tmf/modforms.hpp"
#include "tmf/weierstrass.hpp"

using namespace tmf;

namespace {

Curve random_smooth_curve(std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-4, 4);
    for (;;) {
        Curve c{Rat(d(rng)), Rat(d(rng)), Rat(d(rng)), Rat(d(rng)),
                Rat(d(rng))};
        if (invariants(c).delta != 0) return c;
    }
}

Transformation random_transformation(std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    std::uniform_int_distribution<long> lam(1, 4);
    return {make_rat(lam(rng), lam(rng)), Rat(d(rng)), Rat(d(rng)),
            Rat(d(rng))};
}

}  // namespace

TEST_CASE("invariants of y^2 + y = x^3 - x^2") {
    Curve c{Rat(0), Rat(-1), Rat(1), Rat(0), Rat(0)};
    auto inv = invariants(c);
    CHECK(inv.b2 == -4);
    CHECK(inv.b4 == 0);
    CHECK(inv.b6 == 1);
    CHECK(inv.b8 == -1);
    CHECK(inv.c4 == 16);
    CHECK(inv.c6 == -152);
    CHECK(inv.delta == -11);
    REQUIRE(inv.j.has_value());
    CHECK(*inv.j == make_rat(-4096, 11));
}

TEST_CASE("c4^3 - c6^2 = 1728 delta for the universal curve") {
    auto inv = invariants(universal_curve());
    Poly lhs = inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6;
    Poly rhs = Poly(1728) * inv.delta;
    CHECK(lhs == rhs);
}

TEST_CASE("singular curve has no j-invariant") {
    Curve cusp{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};  // y^2 = x^3
    auto inv = invariants(cusp);
    CHECK(inv.delta == 0);
    CHECK(!inv.j.has_value());
}

TEST_CASE("transformation scaling laws and j-invariance") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        Curve c = random_smooth_curve(rng);
        Transformation g = random_transformation(rng);
        auto before = invariants(c);
        auto after = invariants(transform(c, g));
        Rat l2 = g.lambda * g.lambda;
        Rat l4 = l2 * l2;
        Rat l6 = l4 * l2;
        Rat l12 = l6 * l6;
        CHECK(after.c4 * l4 == before.c4);
        CHECK(after.c6 * l6 == before.c6);
        CHECK(after.delta * l12 == before.delta);
        REQUIRE(after.j.has_value());
        CHECK(*after.j == *before.j);
    }
}

TEST_CASE("transformations compose like substitutions") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        Curve c = random_smooth_curve(rng);
        Transformation g1 = random_transformation(rng);
        Transformation g2 = random_transformation(rng);
        Curve step = transform(transform(c, g1), g2);
        Curve comp = transform(c, compose(g1, g2));
        CHECK(step.a1 == comp.a1);
        CHECK(step.a2 == comp.a2);
        CHECK(step.a3 == comp.a3);
        CHECK(step.a4 == comp.a4);
        CHECK(step.a6 == comp.a6);
    }
}

TEST_CASE("identity transformation is neutral") {
    Curve c{Rat(1), Rat(2), Rat(3), Rat(4), Rat(6)};
    Transformation id{Rat(1), Rat(0), Rat(0), Rat(0)};
    Curve c2 = transform(c, id);
    CHECK(c2.a1 == c.a1);
    CHECK(c2.a6 == c.a6);
}

TEST_CASE("numeric formal group law basics") {
    Curve c{Rat(1), Rat(-2), Rat(3), Rat(0), Rat(1)};
    auto F = formal_group_law(c, 5);
    // F(s, 0) = s: coefficients (1,0) -> 1, (i,0) -> 0 otherwise.
    CHECK(F.at(1, 0) == 1);
    CHECK(F.at(0, 1) == 1);
    for (int i = 2; i <= 5; ++i) CHECK(F.at(i, 0) == 0);
    // Symmetry F(s,t) = F(t,s).
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j) CHECK(F.at(i, j) == F.at(j, i));
    // The quadratic cross term is -a1.
    CHECK(F.at(1, 1) == -c.a1);
    CHECK(fgl_associative(F));
}

TEST_CASE("symbolic formal group law over the universal curve") {
    auto F = formal_group_law(universal_curve(), 4);
    CHECK(F.at(1, 0) == Poly(1));
    CHECK(F.at(2, 0).is_zero());
    CHECK(F.at(1, 1) == -Poly::a1());
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) CHECK(F.at(i, j) == F.at(j, i));
}

TEST_CASE("p-expansion: constant 1/12, all other coefficients integral") {
    BiSeries P = p_expansion(6, 4);
    CHECK(P[0][0] == make_rat(1, 12));
    for (std::size_t j = 0; j < P.zorder(); ++j)
        for (std::size_t n = 0; n < P.qprec(); ++n) {
            if (j == 0 && n == 0) continue;
            CHECK(is_integer(P[j][n]));
        }
    // Odd in nothing: the expansion is even in x.
    for (std::size_t n = 0; n < P.qprec(); ++n) {
        CHECK(P[1][n] == 0);
        CHECK(P[3][n] == 0);
    }
}

TEST_CASE("sigma expansion is odd with leading term x") {
    BiSeries s = sigma_expansion(5, 8);
    CHECK(s[0].is_zero());
    CHECK(s[2].is_zero());
    CHECK(s[4].is_zero());
    CHECK(s[6].is_zero());
    CHECK(s[1][0] == 1);      // leading coefficient
    CHECK(s[3][0] == make_rat(1, 24));  // from 2 sinh(x/2)
}

TEST_CASE("log(sigma/x) is the Eisenstein generating function") {
    // log(sigma/x) = -2 sum_{k>=1} G_2k x^{2k}/(2k)!, where the k = 1 term
    // uses the quasi-modular G_2 = -1/24 + sum sigma_1(n) q^n.
    std::size_t qprec = 6;
    BiSeries s = sigma_expansion(qprec, 10);
    BiSeries L = log(s.shift_down_z(1));
    QSeries g2 = eisenstein(2, qprec).series;  // -1/24 + q + 3q^2 + ...
    CHECK(g2[0] == make_rat(-1, 24));
    CHECK(g2[1] == 1);
    Rat fact = 2;  // (2k)!
    Rat scale = make_rat(-2, 2);
    CHECK(L[2] == scale * g2);
    for (long k = 2; k <= 4; ++k) {
        for (long i = 2 * k - 1; i <= 2 * k; ++i) fact *= i;
        scale = Rat(-2) / fact;
        QSeries expect = scale * eisenstein(2 * k, qprec).series;
        CHECK(L[static_cast<std::size_t>(2 * k)] == expect);
    }
}
