#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satake/laurent.hpp"
#include "test_util.hpp"

using namespace satake;

namespace {

LaurentPoly x(int i, int n) { return LaurentPoly::variable(i, n); }

}  // namespace

TEST_CASE("basic ring identities") {
    auto x1 = x(0, 2), x2 = x(1, 2);
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
    CHECK(x1 * LaurentPoly::monomial({-1, 0}) == LaurentPoly::one(2));
    LaurentPoly sq = (x1 + x2) * (x1 + x2);
    LaurentPoly expected = x1 * x1 + x1 * x2.scaled(QuadScalar(2)) + x2 * x2;
    CHECK(sq == expected);
}

TEST_CASE("arity mismatch is an error") {
    CHECK_THROWS(x(0, 2) * x(0, 3));
    CHECK_THROWS(x(0, 2) + x(0, 3));
}

TEST_CASE("zero coefficients are never stored") {
    auto x1 = x(0, 2);
    LaurentPoly f = x1 - x1;
    CHECK(f.is_zero());
    CHECK(f.term_count() == 0);
    LaurentPoly g = x(0, 2);
    g.set_coeff({5, 5}, QuadScalar(0));
    CHECK(g == x(0, 2));
}

TEST_CASE("eval examples") {
    auto x1 = x(0, 2), x2 = x(1, 2);
    CHECK((x1 + x2).eval({QuadScalar(2), QuadScalar(3)}) == QuadScalar(5));
    CHECK(LaurentPoly::monomial({1, -1}).eval({QuadScalar(2), QuadScalar(3)}) ==
          QuadScalar(make_rat(2, 3)));
    CHECK_THROWS((x1 + x2).eval({QuadScalar(0), QuadScalar(1)}));
}

TEST_CASE("eval is a ring homomorphism") {
    testutil::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly f = rng.laurent(3, 5), g = rng.laurent(3, 5);
        std::vector<QuadScalar> chi;
        for (int i = 0; i < 3; ++i) chi.push_back(rng.nonzero_quad(5));
        CHECK((f * g).eval(chi) == f.eval(chi) * g.eval(chi));
        CHECK((f + g).eval(chi) == f.eval(chi) + g.eval(chi));
    }
}

TEST_CASE("act examples") {
    auto x1 = x(0, 2), x2 = x(1, 2);
    Perm swap12{1, 0};
    CHECK(x1.act(swap12) == x2);
    LaurentPoly f = x1 * x1 + x2.scaled(QuadScalar(3));
    CHECK(f.act(identity_perm(2)) == f);
}

TEST_CASE("act is an action by ring automorphisms") {
    testutil::Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly f = rng.laurent(4, 3), g = rng.laurent(4, 3);
        Perm w1 = rng.perm(4), w2 = rng.perm(4);
        CHECK((f * g).act(w1) == f.act(w1) * g.act(w1));
        CHECK(f.act(compose_perm(w1, w2)) == f.act(w2).act(w1));
    }
}

TEST_CASE("ring axioms on random triples") {
    testutil::Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly f = rng.laurent(3, 3, 12, 5);
        LaurentPoly g = rng.laurent(3, 3, 12, 5);
        LaurentPoly h = rng.laurent(3, 3, 12, 5);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
        CHECK(f * LaurentPoly::one(3) == f);
    }
}

TEST_CASE("deterministic printing") {
    auto x1 = x(0, 2), x2 = x(1, 2);
    LaurentPoly f = x1 * x1 * LaurentPoly::monomial({0, -1}, QuadScalar(2)) +
                    x2.scaled(QuadScalar(Rat(0), make_rat(1, 2), 3));
    CHECK(f.to_string() == "(1/2)s*x2 + 2*x1^2*x2^-1");
    CHECK(LaurentPoly::zero(2).to_string() == "0");
    CHECK(LaurentPoly::one(2).to_string() == "1");
}
