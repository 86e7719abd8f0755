#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satake/quad_scalar.hpp"
#include "test_util.hpp"

using namespace satake;

TEST_CASE("rational canonical form") {
    CHECK(make_rat(3, 6) == make_rat(1, 2));
    CHECK(make_rat(-2, -4) == make_rat(1, 2));
    CHECK(rat_to_string(make_rat(-3, 9)) == "-1/3");
    CHECK(rat_to_string(make_rat(4, 2)) == "2");
    CHECK_THROWS(make_rat(1, 0));
}

TEST_CASE("p-adic valuation on rationals") {
    CHECK(p_valuation(make_rat(12), 2) == 2);
    CHECK(p_valuation(make_rat(1, 8), 2) == -3);
    CHECK(p_valuation(make_rat(9, 5), 3) == 2);
    CHECK_THROWS(p_valuation(Rat(0), 2));
}

TEST_CASE("norm identity (1+s)(1-s) = -1 for p=2") {
    QuadScalar x(Rat(1), Rat(1), 2);
    QuadScalar y(Rat(1), Rat(-1), 2);
    CHECK(x * y == QuadScalar(-1));
}

TEST_CASE("sqrt(5) squared is 5") {
    QuadScalar s(Rat(0), Rat(1), 5);
    CHECK(s * s == QuadScalar(5));
}

TEST_CASE("inverse of 2+3*sqrt(2)") {
    QuadScalar x(Rat(2), Rat(3), 2);
    QuadScalar inv = x.inverse();
    // (2-3s)/(4-18) = -1/7 + (3/14)s
    CHECK(inv == QuadScalar(make_rat(-1, 7), make_rat(3, 14), 2));
    CHECK(x * inv == QuadScalar(1));
}

TEST_CASE("division by zero and mixed primes are errors") {
    QuadScalar x(Rat(1), Rat(1), 2);
    CHECK_THROWS(x / QuadScalar(0));
    CHECK_THROWS(x * QuadScalar(Rat(1), Rat(1), 3));
    CHECK_THROWS(QuadScalar(Rat(1), Rat(1), 4));  // p not prime
}

TEST_CASE("rational values mix with any ambient prime") {
    QuadScalar two(2);
    QuadScalar s3(Rat(0), Rat(1), 3);
    CHECK(two * s3 == QuadScalar(Rat(0), Rat(2), 3));
    CHECK((s3 - s3).is_rational());
}

TEST_CASE("half_power values") {
    CHECK(half_power(5, 0) == QuadScalar(1));
    CHECK(half_power(5, 2) == QuadScalar(5));
    CHECK(half_power(5, -1) == QuadScalar(Rat(0), make_rat(1, 5), 5));
    CHECK(half_power(5, 3) == QuadScalar(Rat(0), Rat(5), 5));
}

TEST_CASE("half_power is a homomorphism in the exponent") {
    for (unsigned long p : {2ul, 5ul}) {
        for (long j = -20; j <= 20; j += 3) {
            for (long k = -20; k <= 20; k += 4) {
                CHECK(half_power(p, j) * half_power(p, k) == half_power(p, j + k));
            }
        }
    }
}

TEST_CASE("field axioms on random values") {
    testutil::Rng rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        QuadScalar x = rng.quad(3), y = rng.quad(3), z = rng.quad(3);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == QuadScalar(0));
        if (!x.is_zero()) CHECK(x * x.inverse() == QuadScalar(1));
        CHECK(x * y == y * x);
    }
}

TEST_CASE("scalar parsing round trip") {
    CHECK(quad_from_string("2+3s", 2) == QuadScalar(Rat(2), Rat(3), 2));
    CHECK(quad_from_string("-1/2", 5) == QuadScalar(make_rat(-1, 2)));
    CHECK(quad_from_string("1/2*s", 5) == QuadScalar(Rat(0), make_rat(1, 2), 5));
    CHECK(quad_from_string("-s", 3) == QuadScalar(Rat(0), Rat(-1), 3));
    CHECK_THROWS(quad_from_string("", 2));
    CHECK_THROWS(quad_from_string("1+", 2));
}
