#include "satake/rational.hpp"

namespace satake {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in: " + s);
    q.canonicalize();
    return q;
}

long p_valuation(const Rat& q, unsigned long p) {
    if (q == 0) throw std::domain_error("p-adic valuation of zero");
    mpz_class pz(static_cast<long>(p));
    long v = 0;
    mpz_class num = q.get_num();
    while (mpz_divisible_p(num.get_mpz_t(), pz.get_mpz_t())) {
        num /= pz;
        ++v;
    }
    mpz_class den = q.get_den();
    while (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t())) {
        den /= pz;
        --v;
    }
    return v;
}

Rat p_unit_part(const Rat& q, unsigned long p) {
    return q * rat_pow(p, -p_valuation(q, p));
}

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    mpz_class z(static_cast<long>(p));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

Rat rat_pow(unsigned long p, long k) {
    mpz_class base(static_cast<long>(p));
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0) return Rat(pw);
    return make_rat(mpz_class(1), pw);
}

}  // namespace satake
