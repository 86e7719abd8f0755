#pragma once

#include <map>
#include <vector>

#include "satake/laurent.hpp"
#include "satake/linalg.hpp"
#include "satake/perm.hpp"

namespace satake {

// Unramified character chi of the diagonal torus, given by its values on
// diag(p^{e_1}, ..., p^{e_n}): an n-tuple of nonzero scalars.
using OrbitPoint = std::vector<QuadScalar>;

// S_n-orbit of an OrbitPoint: a maximal ideal of the invariant ring A^W.
// Points are deduplicated and kept in a canonical lexicographic order.
struct WOrbit {
    std::vector<OrbitPoint> points;
    size_t size() const { return points.size(); }
    bool contains(const OrbitPoint& q) const;
};

// The finite-dimensional quotient A / m A with the commuting multiplication
// operators of the variables. dim is always n!.
struct QuotientModule {
    int n = 0;
    unsigned long p = 2;
    int dim = 0;
    std::vector<QuadMatrix> mult_ops;   // action of x_1, ..., x_n
    std::vector<ExpVec> basis_tags;     // monomial exponents of the chosen basis
};

OrbitPoint act_on_point(const Perm& w, const OrbitPoint& chi);

WOrbit orbit(const OrbitPoint& chi);

// Regular iff the orbit has the full n! points (trivial stabilizer).
bool is_regular(const WOrbit& o);

// Construct A / m A for the maximal ideal m = (e_j - e_j(chi)) of A^W, via
// the n^n-dimensional tensor intermediate (each variable satisfies the
// degree-n characteristic polynomial of chi) followed by an exact
// linear-algebra quotient. Throws logic_error if the dimension is not n!.
QuotientModule build_quotient(const OrbitPoint& chi, unsigned long p);

// e_j(M_1, ..., M_n) = e_j(chi) Id for all j.
bool annihilator_check(const QuotientModule& q, const OrbitPoint& chi);

// Composition-series multiplicities: for each orbit point w(chi), the
// dimension of the joint generalized eigenspace of the multiplication
// operators. Multiplicities sum to n! and the support lies in the orbit.
std::map<OrbitPoint, int> composition_factors(const QuotientModule& q, const WOrbit& o);

}  // namespace satake
