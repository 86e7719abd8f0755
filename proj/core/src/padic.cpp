#include "satake/padic.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace satake {

namespace {

constexpr long kValInfinity = std::numeric_limits<long>::max();

long entry_val(const Rat& q, unsigned long p) {
    return q == 0 ? kValInfinity : p_valuation(q, p);
}

mpz_class pow_z(unsigned long p, int k) {
    mpz_class base(static_cast<long>(p));
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

PAdicMatrix::PAdicMatrix(int n_, unsigned long p_)
    : n(n_), p(p_), entries(n_, std::vector<Rat>(n_, Rat(0))) {
    if (!is_prime(p_)) throw std::invalid_argument("PAdicMatrix: p not prime");
}

PAdicMatrix PAdicMatrix::diag_powers(const std::vector<int>& exps, unsigned long p) {
    PAdicMatrix m(static_cast<int>(exps.size()), p);
    for (size_t i = 0; i < exps.size(); ++i) m.entries[i][i] = rat_pow(p, exps[i]);
    return m;
}

Rat PAdicMatrix::det() const {
    // direct cofactor expansion; n <= 3 in practice
    if (n == 1) return entries[0][0];
    if (n == 2)
        return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
    Rat d(0);
    for (int j = 0; j < n; ++j) {
        std::vector<std::vector<Rat>> minor;
        for (int i = 1; i < n; ++i) {
            std::vector<Rat> row;
            for (int k = 0; k < n; ++k)
                if (k != j) row.push_back(entries[i][k]);
            minor.push_back(std::move(row));
        }
        PAdicMatrix sub(n - 1, p);
        sub.entries = std::move(minor);
        Rat term = entries[0][j] * sub.det();
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

PAdicMatrix PAdicMatrix::inverse() const {
    // Gauss-Jordan over Q
    std::vector<std::vector<Rat>> a = entries;
    PAdicMatrix inv(n, p);
    for (int i = 0; i < n; ++i) inv.entries[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) throw std::domain_error("PAdicMatrix: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv.entries[pivot], inv.entries[col]);
        Rat d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv.entries[col][j] /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv.entries[i][j] -= f * inv.entries[col][j];
            }
        }
    }
    return inv;
}

PAdicMatrix PAdicMatrix::operator*(const PAdicMatrix& o) const {
    if (n != o.n || p != o.p) throw std::invalid_argument("PAdicMatrix: mismatch");
    PAdicMatrix r(n, p);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (entries[i][k] == 0) continue;
            for (int j = 0; j < n; ++j)
                r.entries[i][j] += entries[i][k] * o.entries[k][j];
        }
    return r;
}

bool in_gln_zp(const PAdicMatrix& m) {
    for (const auto& row : m.entries)
        for (const auto& e : row)
            if (e != 0 && p_valuation(e, m.p) < 0) return false;
    Rat d = m.det();
    return d != 0 && p_valuation(d, m.p) == 0;
}

Partition cartan_invariants(const PAdicMatrix& m) {
    if (m.det() == 0) throw std::domain_error("cartan_invariants: singular matrix");
    std::vector<std::vector<Rat>> a = m.entries;
    const int n = m.n;
    Partition divisors;
    for (int k = 0; k < n; ++k) {
        // pivot on minimal p-valuation in the trailing submatrix
        long best = kValInfinity;
        int bi = -1, bj = -1;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                long v = entry_val(a[i][j], m.p);
                if (v < best) { best = v; bi = i; bj = j; }
            }
        if (bi < 0) throw std::domain_error("cartan_invariants: singular matrix");
        std::swap(a[bi], a[k]);
        for (int i = 0; i < n; ++i) std::swap(a[i][bj], a[i][k]);
        // clear row and column; quotients have valuation >= 0 by pivot choice
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (int j = k + 1; j < n; ++j) {
            if (a[k][j] == 0) continue;
            Rat f = a[k][j] / a[k][k];
            for (int i = k; i < n; ++i) a[i][j] -= f * a[i][k];
        }
        divisors.push_back(static_cast<int>(best));
    }
    std::sort(divisors.begin(), divisors.end(), std::greater<int>());
    return divisors;
}

bool padic_bounds_ok(int n, const Partition& lambda) {
    if (static_cast<int>(lambda.size()) != n) return false;
    if (!is_dominant(lambda)) return false;
    int spread = lambda.front() - lambda.back();
    if (n == 2) return spread <= 3;
    if (n == 3) return spread <= 2;
    return false;
}

namespace {

// Reduced lower-triangular transversal for K p^lambda K with lambda >= 0,
// lambda_n = 0. Diagonal p^{d_i}, entry (i,j) a residue mod p^{d_j}.
std::vector<PAdicMatrix> reps_nonneg(const Partition& lambda, unsigned long p) {
    const int n = static_cast<int>(lambda.size());
    int total = 0;
    for (int part : lambda) total += part;

    std::vector<PAdicMatrix> out;
    std::vector<int> d(n, 0);

    // enumerate diagonal valuation vectors with sum = total
    auto next_d = [&]() {
        // odometer over [0, total]^n, then filter by sum
        for (int i = 0; i < n; ++i) {
            if (d[i] < total) { ++d[i]; for (int j = 0; j < i; ++j) d[j] = 0; return true; }
        }
        return false;
    };

    do {
        int s = 0;
        for (int x : d) s += x;
        if (s != total) continue;

        // off-diagonal positions (i, j), i > j, entry in [0, p^{d_j})
        std::vector<std::pair<int, int>> pos;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) pos.emplace_back(i, j);

        std::vector<mpz_class> caps(pos.size());
        for (size_t k = 0; k < pos.size(); ++k) caps[k] = pow_z(p, d[pos[k].second]);

        std::vector<mpz_class> vals(pos.size(), 0);
        bool more = true;
        while (more) {
            PAdicMatrix c(n, p);
            for (int i = 0; i < n; ++i) c.entries[i][i] = Rat(pow_z(p, d[i]));
            for (size_t k = 0; k < pos.size(); ++k)
                c.entries[pos[k].first][pos[k].second] = Rat(vals[k]);
            if (cartan_invariants(c) == lambda) out.push_back(std::move(c));
            // increment mixed-radix counter
            more = false;
            for (size_t k = 0; k < pos.size(); ++k) {
                vals[k] += 1;
                if (vals[k] < caps[k]) { more = true; break; }
                vals[k] = 0;
            }
        }
    } while (next_d());
    return out;
}

// remove candidates lying in an already-seen right coset K c
void dedup_by_coset(std::vector<PAdicMatrix>& reps) {
    std::vector<PAdicMatrix> kept;
    for (const auto& c : reps) {
        bool dup = false;
        for (const auto& k : kept) {
            if (in_gln_zp(c * k.inverse())) { dup = true; break; }
        }
        if (!dup) kept.push_back(c);
    }
    reps = std::move(kept);
}

std::vector<PAdicMatrix> reps_internal(const Partition& lambda, unsigned long p) {
    const int n = static_cast<int>(lambda.size());
    int shift = lambda.back();
    Partition shifted = lambda;
    for (int& part : shifted) part -= shift;

    std::vector<PAdicMatrix> reps = reps_nonneg(shifted, p);
    if (reps.size() <= 1000) {
        dedup_by_coset(reps);
    }
    // else: the reduced transversal is already irredundant (Hermite
    // uniqueness over the DVR); the pairwise test is quadratic and skipped

    if (shift != 0) {
        Rat c = rat_pow(p, shift);
        for (auto& r : reps)
            for (auto& row : r.entries)
                for (auto& e : row) e *= c;
    }
    return reps;
}

}  // namespace

std::vector<PAdicMatrix> right_coset_reps(const Partition& lambda, unsigned long p) {
    const int n = static_cast<int>(lambda.size());
    if (!is_prime(p)) throw std::invalid_argument("right_coset_reps: p not prime");
    if (!padic_bounds_ok(n, lambda))
        throw std::invalid_argument("right_coset_reps: n or lambda out of bounds");
    return reps_internal(lambda, p);
}

namespace {

void dominant_candidates(int n, int total, int lo, int hi, Partition& acc,
                         std::vector<Partition>& out) {
    if (static_cast<int>(acc.size()) == n) {
        if (total == 0) out.push_back(acc);
        return;
    }
    int upper = acc.empty() ? hi : std::min(hi, acc.back());
    for (int v = upper; v >= lo; --v) {
        acc.push_back(v);
        dominant_candidates(n, total - v, lo, hi, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::map<Partition, long> convolve_oracle(const Partition& lambda,
                                          const Partition& mu, unsigned long p) {
    const int n = static_cast<int>(lambda.size());
    if (static_cast<int>(mu.size()) != n)
        throw std::invalid_argument("convolve_oracle: arity mismatch");
    if (!padic_bounds_ok(n, lambda) || !padic_bounds_ok(n, mu))
        throw std::invalid_argument("convolve_oracle: out of bounds");

    std::vector<PAdicMatrix> mu_reps = reps_internal(mu, p);
    int total = 0;
    for (int x : lambda) total += x;
    for (int x : mu) total += x;

    std::vector<Partition> candidates;
    Partition acc;
    dominant_candidates(n, total, lambda.back() + mu.back(),
                        lambda.front() + mu.front(), acc, candidates);

    std::map<Partition, long> result;
    for (const Partition& nu : candidates) {
        PAdicMatrix nu_mat = PAdicMatrix::diag_powers(nu, p);
        long count = 0;
        for (const auto& c : mu_reps) {
            // bi-K-invariance of 1_{K lambda K} makes the coset choice immaterial
            if (cartan_invariants(nu_mat * c.inverse()) == lambda) ++count;
        }
        if (count != 0) result[nu] = count;
    }

    // mass identity: deg(lambda) deg(mu) = sum_nu c_nu deg(nu)
    long deg_l = static_cast<long>(reps_internal(lambda, p).size());
    long deg_m = static_cast<long>(mu_reps.size());
    long mass = 0;
    for (const auto& [nu, c] : result)
        mass += c * static_cast<long>(reps_internal(nu, p).size());
    if (mass != deg_l * deg_m)
        throw std::logic_error("convolve_oracle: mass identity violated");
    return result;
}

namespace {

long count_at_level(const Partition& lambda, const std::vector<int>& a,
                    unsigned long p, int N) {
    mpz_class pN = pow_z(p, N);
    Rat p_a0 = rat_pow(p, a[0]);
    Rat p_a1 = rat_pow(p, a[1]);
    long count = 0;
    for (mpz_class m = 0; m < pN; ++m) {
        Rat x = make_rat(m, pN);  // representative of p^{-N} Z_p / Z_p
        PAdicMatrix g(2, p);
        g.entries[0][0] = p_a0;
        g.entries[0][1] = p_a0 * x;
        g.entries[1][1] = p_a1;
        if (cartan_invariants(g) == lambda) ++count;
    }
    return count;
}

}  // namespace

Rat constant_term_oracle(const Partition& lambda, const std::vector<int>& a,
                         unsigned long p, int N) {
    if (lambda.size() != 2 || a.size() != 2)
        throw std::invalid_argument("constant_term_oracle: n = 2 only");
    if (!is_dominant(lambda))
        throw std::invalid_argument("constant_term_oracle: lambda not dominant");
    int guaranteed = lambda[0] - lambda[1] + 1;
    if (N <= 0) N = std::max(1, guaranteed);
    long c0 = count_at_level(lambda, a, p, N);
    long c1 = count_at_level(lambda, a, p, N + 1);
    if (c0 != c1) {
        if (N >= guaranteed)
            throw std::logic_error(
                "constant_term_oracle: unstable past the support bound");
        throw std::invalid_argument(
            "constant_term_oracle: truncation level too small");
    }
    return Rat(c0);
}

}  // namespace satake
