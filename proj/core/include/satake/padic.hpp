#pragma once

#include <map>
#include <vector>

#include "satake/rational.hpp"
#include "satake/symfun.hpp"

namespace satake {

// Square matrix over Z[1/p] (stored as exact rationals), an element of
// GL_n(Q_p) known to finite precision only through its p-valuations.
struct PAdicMatrix {
    int n = 0;
    unsigned long p = 2;
    std::vector<std::vector<Rat>> entries;

    PAdicMatrix() = default;
    PAdicMatrix(int n_, unsigned long p_);
    static PAdicMatrix diag_powers(const std::vector<int>& exps, unsigned long p);

    Rat det() const;
    PAdicMatrix inverse() const;
    PAdicMatrix operator*(const PAdicMatrix& o) const;
};

// All entries in Z_p (valuation >= 0) and unit determinant: membership in
// K = GL_n(Z_p).
bool in_gln_zp(const PAdicMatrix& m);

// Elementary-divisor valuations of an invertible matrix over the DVR Z_(p),
// weakly decreasing. Invariant under left/right multiplication by GL_n(Z_p).
Partition cartan_invariants(const PAdicMatrix& m);

// Work bounds for the enumeration oracle.
bool padic_bounds_ok(int n, const Partition& lambda);

// Complete irredundant right-coset decomposition K p^lambda K = disjoint
// union of K c_j. n in {2,3}; spread bounded (4 for n=2, 2 for n=3).
std::vector<PAdicMatrix> right_coset_reps(const Partition& lambda, unsigned long p);

// Structure constants of 1_{K lambda K} * 1_{K mu K} in the double-coset
// basis, by counting cosets. Verifies the mass identity internally.
std::map<Partition, long> convolve_oracle(const Partition& lambda,
                                          const Partition& mu, unsigned long p);

// Constant term integral for GL_2: sum over the unipotent direction of the
// indicator of K p^lambda K at the torus point p^a, with the measure
// normalized so integral over U cap K is 1. Computed at truncation levels N
// and N+1; disagreement below the guaranteed threshold is an internal error.
// N = 0 selects the default level max(1, lambda_1 - lambda_2 + 1).
Rat constant_term_oracle(const Partition& lambda, const std::vector<int>& a,
                         unsigned long p, int N = 0);

}  // namespace satake
