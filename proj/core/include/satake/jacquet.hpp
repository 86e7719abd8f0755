#pragma once

#include <map>
#include <string>
#include <vector>

#include "satake/quotient.hpp"

namespace satake {

// Character of the torus, same shape as OrbitPoint.
using UnramifiedCharacter = std::vector<QuadScalar>;

// Multiset of characters, canonically sorted; compared exactly.
using CharacterMultiset = std::map<UnramifiedCharacter, int>;

// delta_0(diag(p^a)) = p^{-sum_i (n+1-2i) a_i} for the Borel of GL_n.
Rat modular_character(const std::vector<int>& a, unsigned long p);

// delta_0^{1/2}(diag(p^a)) as an element of Q(sqrt p).
QuadScalar modular_character_half(const std::vector<int>& a, unsigned long p);

// The nu-twist applied to the i-th coordinate: p^{-(n+1-2i)/2}.
QuadScalar jacquet_twist_coord(int i, int n, unsigned long p);

// Jacquet-module character multiset of W(I,K): the composition factors of
// A / m A, each twisted by delta_0^{1/2}. Cardinality with multiplicity
// is n!. Set `twist = false` to recover the untwisted factors.
CharacterMultiset jacquet_of_W_module(const OrbitPoint& chi, unsigned long p,
                                      bool twist = true);

// Casselman multiset of the principal series: { w(chi') : w in S_n } with
// orbit-stabilizer multiplicities.
CharacterMultiset jacquet_of_principal_series(const UnramifiedCharacter& chi_prime);

struct VerifyReport {
    bool regular = false;
    bool match = false;
    CharacterMultiset w_module_factors;
    CharacterMultiset principal_series_factors;
};

// Witness for the Jacquet-multiset identity between W(I,K) and the
// principal series with parameter chi'_i = chi_i p^{-(n+1-2i)/2}. Both
// multisets are written in unnormalized coordinates (the delta^{1/2}
// factor at fixed positions), so the principal-series side is the
// "dot" orbit { nu . w(nu^{-1} chi') } rather than the plain orbit.
// Throws on a non-regular chi.
VerifyReport verify_prop_cjm8(const OrbitPoint& chi, unsigned long p);

// The evaluation character of H_K at chi is multiplicative on a finite set
// of basis products, i.e. H_K / I is one-dimensional.
bool k_invariants_dimension_check(const OrbitPoint& chi, unsigned long p);

}  // namespace satake
