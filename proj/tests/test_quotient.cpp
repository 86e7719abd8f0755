#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satake/quotient.hpp"
#include "test_util.hpp"

using namespace satake;

namespace {

OrbitPoint rationals(std::vector<long> v) {
    OrbitPoint chi;
    for (long x : v) chi.push_back(QuadScalar(Rat(x)));
    return chi;
}

}  // namespace

TEST_CASE("orbits") {
    WOrbit o = orbit(rationals({2, 3}));
    CHECK(o.size() == 2);
    CHECK(o.contains(rationals({3, 2})));

    CHECK(orbit(rationals({4, 4})).size() == 1);
    CHECK(orbit(rationals({1, 2, 3})).size() == 6);
    CHECK(orbit(rationals({1, 1, 2})).size() == 3);
    CHECK_THROWS(orbit({QuadScalar(0), QuadScalar(1)}));
}

TEST_CASE("regularity predicate") {
    CHECK(is_regular(orbit(rationals({2, 3}))));
    CHECK_FALSE(is_regular(orbit(rationals({4, 4}))));
    CHECK_FALSE(is_regular(orbit(rationals({1, 1, 2}))));
}

TEST_CASE("regularity is equivalent to pairwise-distinct coordinates") {
    testutil::Rng rng(51);
    for (int n = 2; n <= 4; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            OrbitPoint chi = rng.character(n, 3);
            bool distinct = true;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (chi[i] == chi[j]) distinct = false;
            CHECK(is_regular(orbit(chi)) == distinct);
        }
    }
}

TEST_CASE("quotient for n=2, chi=(2,3)") {
    QuotientModule q = build_quotient(rationals({2, 3}), 5);
    CHECK(q.dim == 2);
    REQUIRE(q.mult_ops.size() == 2);
    // trace of M1 + M2 = 2 e1(chi) = 10
    CHECK((q.mult_ops[0] + q.mult_ops[1]).trace() == QuadScalar(10));
    // M1 M2 = e2(chi) Id = 6 Id
    CHECK(q.mult_ops[0] * q.mult_ops[1] == QuadMatrix::identity(2).scaled(QuadScalar(6)));
    CHECK(annihilator_check(q, rationals({2, 3})));
    CHECK_FALSE(annihilator_check(q, rationals({2, 5})));
}

TEST_CASE("non-regular chi still gives dim n!") {
    QuotientModule q = build_quotient(rationals({4, 4}), 3);
    CHECK(q.dim == 2);
    q = build_quotient(rationals({2, 2, 5}), 3);
    CHECK(q.dim == 6);
}

TEST_CASE("quotient dimension is n! and operators commute and are invertible") {
    testutil::Rng rng(52);
    long fact[5] = {1, 1, 2, 6, 24};
    for (int n = 2; n <= 4; ++n) {
        int trials = n == 4 ? 2 : 6;
        for (int trial = 0; trial < trials; ++trial) {
            OrbitPoint chi = rng.character(n, 3);
            QuotientModule q = build_quotient(chi, 3);
            CHECK(q.dim == fact[n]);
            for (int i = 0; i < n; ++i) {
                CHECK_FALSE(q.mult_ops[i].det().is_zero());
                for (int j = i + 1; j < n; ++j)
                    CHECK(q.mult_ops[i] * q.mult_ops[j] == q.mult_ops[j] * q.mult_ops[i]);
            }
            CHECK(annihilator_check(q, chi));
        }
    }
}

TEST_CASE("quotient works over the quadratic field") {
    OrbitPoint chi{QuadScalar(Rat(1), Rat(1), 2), QuadScalar(Rat(1), Rat(-1), 2)};
    QuotientModule q = build_quotient(chi, 2);
    CHECK(q.dim == 2);
    CHECK(annihilator_check(q, chi));
    auto factors = composition_factors(q, orbit(chi));
    CHECK(factors.size() == 2);
}

TEST_CASE("composition factors for a regular orbit, n=2") {
    OrbitPoint chi = rationals({2, 3});
    QuotientModule q = build_quotient(chi, 5);
    auto factors = composition_factors(q, orbit(chi));
    REQUIRE(factors.size() == 2);
    CHECK(factors.at(rationals({2, 3})) == 1);
    CHECK(factors.at(rationals({3, 2})) == 1);
}

TEST_CASE("composition factors for a non-regular orbit, n=2") {
    OrbitPoint chi = rationals({4, 4});
    QuotientModule q = build_quotient(chi, 3);
    auto factors = composition_factors(q, orbit(chi));
    REQUIRE(factors.size() == 1);
    CHECK(factors.at(chi) == 2);
}

TEST_CASE("composition factors for regular orbits: all multiplicities one") {
    testutil::Rng rng(53);
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            OrbitPoint chi = rng.regular_character(n, 3);
            QuotientModule q = build_quotient(chi, 3);
            WOrbit o = orbit(chi);
            auto factors = composition_factors(q, o);
            CHECK(factors.size() == o.size());
            int total = 0;
            for (const auto& [point, mult] : factors) {
                CHECK(mult == 1);
                CHECK(o.contains(point));
                total += mult;
            }
            CHECK(total == q.dim);
        }
    }
}

TEST_CASE("multiplicities sum to n! for non-regular orbits too") {
    for (const auto& chi : {rationals({2, 2, 7}), rationals({3, 3, 3})}) {
        QuotientModule q = build_quotient(chi, 2);
        auto factors = composition_factors(q, orbit(chi));
        int total = 0;
        for (const auto& [point, mult] : factors) total += mult;
        CHECK(total == 6);
    }
}

TEST_CASE("conjugation equivariance of composition factors") {
    testutil::Rng rng(54);
    for (int trial = 0; trial < 5; ++trial) {
        OrbitPoint chi = rng.character(3, 3);
        Perm w = rng.perm(3);
        OrbitPoint wchi = act_on_point(w, chi);
        auto f1 = composition_factors(build_quotient(chi, 3), orbit(chi));
        auto f2 = composition_factors(build_quotient(wchi, 3), orbit(wchi));
        CHECK(f1 == f2);
    }
}

TEST_CASE("bad inputs") {
    CHECK_THROWS(build_quotient({QuadScalar(0), QuadScalar(1)}, 3));
    CHECK_THROWS(build_quotient(rationals({1, 2, 3, 4, 5}), 3));
}
