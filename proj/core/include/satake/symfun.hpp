#pragma once

#include <map>
#include <vector>

#include "satake/laurent.hpp"

namespace satake {

// Weakly decreasing integer vector of length n; indexes a dominant
// cocharacter of the diagonal torus. Negative parts are allowed.
using Partition = std::vector<int>;

bool is_dominant(const Partition& lambda);

// e_i in n variables, 1 <= i <= n.
LaurentPoly elementary_symmetric(int i, int n);

// m_lambda: sum of the distinct monomials in the S_n-orbit of x^lambda.
LaurentPoly monomial_symmetric(const Partition& lambda);

// Reynolds operator (1/n!) sum_w w.f; idempotent, fixes invariants.
LaurentPoly symmetrize(const LaurentPoly& f);

bool is_invariant(const LaurentPoly& f);

// Expand an invariant polynomial in the monomial-symmetric basis by peeling
// lexicographically greatest orbits. Throws on non-invariant input.
std::map<Partition, QuadScalar> decompose_m_basis(const LaurentPoly& f);

LaurentPoly assemble_from_m_basis(const std::map<Partition, QuadScalar>& coeffs, int n);

// Exact division of Laurent polynomials; a nonzero remainder is an internal
// error (logic_error).
LaurentPoly exact_divide(const LaurentPoly& numerator, const LaurentPoly& denominator);

// Hall-Littlewood polynomial P_lambda(x; t) via the symmetrized-sum formula
//   v_lambda(t)^{-1} sum_w w( x^lambda prod_{i<j} (x_i - t x_j)/(x_i - x_j) ).
// Unitriangular in the m-basis; P_lambda(x; 1) = m_lambda. Throws when
// v_lambda(t) = 0 (t a low-order root of unity).
LaurentPoly hall_littlewood(const Partition& lambda, const QuadScalar& t);

}  // namespace satake
