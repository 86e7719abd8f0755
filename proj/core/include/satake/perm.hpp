#pragma once

#include <vector>

namespace satake {

// Permutation of {0, ..., n-1}; perm[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm inverse_perm(const Perm& w);
// (a * b)(i) = a(b(i))
Perm compose_perm(const Perm& a, const Perm& b);
int perm_sign(const Perm& w);
bool is_valid_perm(const Perm& w);

// All n! permutations in lexicographic order.
std::vector<Perm> all_permutations(int n);

}  // namespace satake
