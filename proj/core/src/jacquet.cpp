#include "satake/jacquet.hpp"

#include <stdexcept>

#include "satake/hecke.hpp"

namespace satake {

namespace {

long delta_exponent(const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    long s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<long>(a[i]) * (n - 1 - 2 * i);
    return -s;
}

}  // namespace

Rat modular_character(const std::vector<int>& a, unsigned long p) {
    return rat_pow(p, delta_exponent(a));
}

QuadScalar modular_character_half(const std::vector<int>& a, unsigned long p) {
    return half_power(p, delta_exponent(a));
}

QuadScalar jacquet_twist_coord(int i, int n, unsigned long p) {
    // p^{-(n+1-2i)/2} with 1-based i; 0-based: -(n-1-2i)
    return half_power(p, -(n - 1 - 2 * i));
}

CharacterMultiset jacquet_of_W_module(const OrbitPoint& chi, unsigned long p,
                                      bool twist) {
    int n = static_cast<int>(chi.size());
    WOrbit o = orbit(chi);
    QuotientModule q = build_quotient(chi, p);
    std::map<OrbitPoint, int> factors = composition_factors(q, o);
    CharacterMultiset out;
    for (const auto& [point, mult] : factors) {
        UnramifiedCharacter c = point;
        if (twist)
            for (int i = 0; i < n; ++i) c[i] *= jacquet_twist_coord(i, n, p);
        out[c] += mult;
    }
    return out;
}

CharacterMultiset jacquet_of_principal_series(const UnramifiedCharacter& chi_prime) {
    int n = static_cast<int>(chi_prime.size());
    CharacterMultiset out;
    for (const Perm& w : all_permutations(n)) out[act_on_point(w, chi_prime)] += 1;
    return out;
}

VerifyReport verify_prop_cjm8(const OrbitPoint& chi, unsigned long p) {
    VerifyReport report;
    report.regular = is_regular(orbit(chi));
    if (!report.regular)
        throw std::invalid_argument("verify_prop_cjm8: chi is not W-regular");

    int n = static_cast<int>(chi.size());
    UnramifiedCharacter chi_prime = chi;
    for (int i = 0; i < n; ++i) chi_prime[i] *= jacquet_twist_coord(i, n, p);

    report.w_module_factors = jacquet_of_W_module(chi, p);
    // Casselman factors of Ind(chi') written in the same unnormalized
    // coordinates as the W-module side: the permutation acts on the
    // untwisted parameter and the delta^{1/2} twist stays at its position,
    // i.e. the multiset { nu . w(nu^{-1} chi') : w in S_n }.
    for (const Perm& w : all_permutations(n)) {
        UnramifiedCharacter c = act_on_point(w, chi);
        for (int i = 0; i < n; ++i) c[i] *= jacquet_twist_coord(i, n, p);
        report.principal_series_factors[c] += 1;
    }
    report.match = report.w_module_factors == report.principal_series_factors;
    return report;
}

bool k_invariants_dimension_check(const OrbitPoint& chi, unsigned long p) {
    int n = static_cast<int>(chi.size());
    // basis elements with small dominant shapes
    std::vector<Partition> shapes;
    shapes.push_back(Partition(n, 0));
    for (int k = 1; k <= n; ++k) {
        Partition l(n, 0);
        for (int i = 0; i < k; ++i) l[i] = 1;
        shapes.push_back(l);
    }
    Partition two(n, 0);
    two[0] = 2;
    shapes.push_back(two);

    for (const Partition& a : shapes) {
        for (const Partition& b : shapes) {
            HeckeElement prod =
                multiply(HeckeElement::basis(a, p), HeckeElement::basis(b, p));
            QuadScalar lhs = spherical_eigenvalue(a, chi, p) * spherical_eigenvalue(b, chi, p);
            QuadScalar rhs(0);
            for (const auto& [nu, c] : prod.terms())
                rhs += c * spherical_eigenvalue(nu, chi, p);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace satake
