#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace satake {

// Exact rational scalar. Backed by GMP; always kept in canonical form
// (gcd(|num|, den) = 1, den > 0).
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "num/den", or just "num" when den = 1.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s);

// p-adic valuation of a nonzero rational; val_p(0) is an error.
long p_valuation(const Rat& q, unsigned long p);

// q * p^{-val_p(q)} evaluated as an exact rational (the unit part of q at p).
Rat p_unit_part(const Rat& q, unsigned long p);

bool is_prime(unsigned long p);

// p^k as an exact rational, k any integer.
Rat rat_pow(unsigned long p, long k);

}  // namespace satake
