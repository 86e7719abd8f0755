#pragma once

#include <compare>
#include <string>

#include "satake/rational.hpp"

namespace satake {

// Element a + b*sqrt(p) of the real quadratic field Q(sqrt(p)), p prime.
// Representation is unique since sqrt(p) is irrational. Values with b = 0
// are plain rationals and carry p = 0 so they are compatible with any
// ambient prime; mixing two nonzero sqrt parts over different primes is an
// error.
class QuadScalar {
public:
    QuadScalar() : a_(0), b_(0), p_(0) {}
    QuadScalar(Rat a) : a_(std::move(a)), b_(0), p_(0) {}
    QuadScalar(long v) : a_(v), b_(0), p_(0) {}
    QuadScalar(Rat a, Rat b, unsigned long p);

    const Rat& rational_part() const { return a_; }
    const Rat& sqrt_part() const { return b_; }
    unsigned long prime() const { return p_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadScalar operator-() const;
    QuadScalar operator+(const QuadScalar& o) const;
    QuadScalar operator-(const QuadScalar& o) const;
    QuadScalar operator*(const QuadScalar& o) const;
    QuadScalar operator/(const QuadScalar& o) const;
    QuadScalar& operator+=(const QuadScalar& o) { return *this = *this + o; }
    QuadScalar& operator-=(const QuadScalar& o) { return *this = *this - o; }
    QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }
    QuadScalar& operator/=(const QuadScalar& o) { return *this = *this / o; }

    QuadScalar inverse() const;

    bool operator==(const QuadScalar& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadScalar& o) const { return !(*this == o); }

    // Total order on the (a, b) pair; used only for canonical sorting of
    // orbit points and deterministic output, not for field semantics.
    std::strong_ordering operator<=>(const QuadScalar& o) const;

    // e.g. "2", "1/2", "s", "(1/2)s", "2+3s" with s = sqrt(p)
    std::string to_string() const;

private:
    Rat a_, b_;
    unsigned long p_;

    // shared prime of two operands, or throw on a genuine mismatch
    static unsigned long join_prime(const QuadScalar& x, const QuadScalar& y);
};

// p^{k/2}: rational for even k, otherwise p^{(k-1)/2} * sqrt(p).
QuadScalar half_power(unsigned long p, long k);

// Grammar: "a/b", "a/b+c/d*s", "c/d*s", "-s", ... with s^2 = p.
QuadScalar quad_from_string(const std::string& s, unsigned long p);

}  // namespace satake
