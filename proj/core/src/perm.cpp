#include "satake/perm.hpp"

#include <algorithm>
#include <numeric>

namespace satake {

Perm identity_perm(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

Perm inverse_perm(const Perm& w) {
    Perm inv(w.size());
    for (size_t i = 0; i < w.size(); ++i) inv[w[i]] = static_cast<int>(i);
    return inv;
}

Perm compose_perm(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

int perm_sign(const Perm& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

bool is_valid_perm(const Perm& w) {
    std::vector<bool> seen(w.size(), false);
    for (int x : w) {
        if (x < 0 || x >= static_cast<int>(w.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

std::vector<Perm> all_permutations(int n) {
    std::vector<Perm> out;
    Perm w = identity_perm(n);
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace satake
