#include "satake/symfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace satake {

bool is_dominant(const Partition& lambda) {
    for (size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i - 1] < lambda[i]) return false;
    return true;
}

LaurentPoly elementary_symmetric(int i, int n) {
    if (i < 1 || i > n) throw std::out_of_range("elementary_symmetric: index");
    // iterate over i-subsets via a sorted selector vector
    std::vector<int> sel(i);
    for (int k = 0; k < i; ++k) sel[k] = k;
    LaurentPoly f(n);
    while (true) {
        ExpVec e(n, 0);
        for (int k : sel) e[k] = 1;
        f.set_coeff(e, QuadScalar(1));
        int j = i - 1;
        while (j >= 0 && sel[j] == n - i + j) --j;
        if (j < 0) break;
        ++sel[j];
        for (int k = j + 1; k < i; ++k) sel[k] = sel[k - 1] + 1;
    }
    return f;
}

LaurentPoly monomial_symmetric(const Partition& lambda) {
    int n = static_cast<int>(lambda.size());
    std::vector<int> v = lambda;
    std::sort(v.begin(), v.end());
    LaurentPoly f(n);
    do {
        f.set_coeff(ExpVec(v.begin(), v.end()), QuadScalar(1));
    } while (std::next_permutation(v.begin(), v.end()));
    return f;
}

LaurentPoly symmetrize(const LaurentPoly& f) {
    int n = f.arity();
    LaurentPoly sum(n);
    long fact = 1;
    for (const Perm& w : all_permutations(n)) {
        sum += f.act(w);
    }
    for (int k = 2; k <= n; ++k) fact *= k;
    return sum.scaled(QuadScalar(make_rat(1, fact)));
}

bool is_invariant(const LaurentPoly& f) {
    int n = f.arity();
    if (n <= 1) return true;
    // transposition (1 2) and the n-cycle generate S_n
    Perm t = identity_perm(n);
    std::swap(t[0], t[1]);
    Perm c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    return f.act(t) == f && f.act(c) == f;
}

std::map<Partition, QuadScalar> decompose_m_basis(const LaurentPoly& f) {
    std::map<Partition, QuadScalar> out;
    LaurentPoly rem = f;
    while (!rem.is_zero()) {
        // lexicographically greatest exponent
        const auto& [e, c] = *rem.terms().rbegin();
        if (!is_dominant(e))
            throw std::invalid_argument(
                "decompose_m_basis: input is not W-invariant");
        out.emplace(Partition(e), c);
        rem -= monomial_symmetric(e).scaled(c);
    }
    return out;
}

LaurentPoly assemble_from_m_basis(const std::map<Partition, QuadScalar>& coeffs, int n) {
    LaurentPoly f(n);
    for (const auto& [lambda, c] : coeffs)
        f += monomial_symmetric(lambda).scaled(c);
    return f;
}

LaurentPoly exact_divide(const LaurentPoly& numerator, const LaurentPoly& denominator) {
    if (denominator.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    int n = numerator.arity();
    if (numerator.is_zero()) return LaurentPoly::zero(n);
    if (n != denominator.arity())
        throw std::invalid_argument("exact_divide: arity mismatch");

    LaurentPoly rem = numerator;
    LaurentPoly quot(n);
    const auto& [ed, cd] = *denominator.terms().rbegin();  // lex-leading divisor term
    // lex-leading terms multiply, so each step peels the true leading quotient
    // term when the division is exact; the cap catches a non-terminating
    // inexact division
    size_t steps = 0;
    const size_t max_steps = 1000 * (numerator.term_count() + denominator.term_count() + 1);
    while (!rem.is_zero()) {
        if (++steps > max_steps)
            throw std::logic_error("exact_divide: division is not exact");
        const auto& [er, cr] = *rem.terms().rbegin();
        ExpVec q(n);
        for (int i = 0; i < n; ++i) q[i] = er[i] - ed[i];
        LaurentPoly qt = LaurentPoly::monomial(q, cr / cd);
        quot += qt;
        LaurentPoly next = rem - qt * denominator;
        // the lex-leading term must cancel, and nothing lex-greater may appear
        if (!next.is_zero() && !(next.terms().rbegin()->first < er))
            throw std::logic_error("exact_divide: division is not exact");
        rem = std::move(next);
    }
    return quot;
}

namespace {

// v_lambda(t) = prod over part values k of [m_k(lambda)]_t!,
// [m]_t! = prod_{j=1}^{m} (1 - t^j)/(1 - t).
QuadScalar hl_normalizer(const Partition& lambda, const QuadScalar& t) {
    std::map<int, int> mult;
    for (int part : lambda) ++mult[part];
    QuadScalar v(1);
    QuadScalar one(1);
    QuadScalar denom = one - t;
    for (const auto& [part, m] : mult) {
        QuadScalar tj(1);
        for (int j = 1; j <= m; ++j) {
            tj *= t;
            if (denom.is_zero()) {
                // t = 1: (1 - t^j)/(1 - t) -> j
                v *= QuadScalar(Rat(j));
            } else {
                v *= (one - tj) / denom;
            }
        }
    }
    return v;
}

}  // namespace

LaurentPoly hall_littlewood(const Partition& lambda, const QuadScalar& t) {
    if (!is_dominant(lambda))
        throw std::invalid_argument("hall_littlewood: lambda must be dominant");
    int n = static_cast<int>(lambda.size());
    if (n == 0) throw std::invalid_argument("hall_littlewood: empty shape");

    // reduce to nonnegative parts: P_{lambda + (c,...,c)} = (x1...xn)^c P_lambda
    if (lambda[n - 1] < 0) {
        int c = lambda[n - 1];
        Partition shifted = lambda;
        for (int& part : shifted) part -= c;
        ExpVec center(n, c);
        return LaurentPoly::monomial(center) * hall_littlewood(shifted, t);
    }

    QuadScalar v = hl_normalizer(lambda, t);
    if (v.is_zero())
        throw std::invalid_argument("hall_littlewood: v_lambda(t) = 0");

    // core = x^lambda * prod_{i<j} (x_i - t x_j)
    LaurentPoly core = LaurentPoly::monomial(ExpVec(lambda.begin(), lambda.end()));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            LaurentPoly factor =
                LaurentPoly::variable(i, n) - LaurentPoly::variable(j, n).scaled(t);
            core *= factor;
        }
    }

    // numerator = sum_w sgn(w) w(core); Vandermonde = prod_{i<j} (x_i - x_j)
    LaurentPoly numerator(n);
    for (const Perm& w : all_permutations(n)) {
        LaurentPoly term = core.act(w);
        numerator += perm_sign(w) > 0 ? term : -term;
    }
    LaurentPoly vandermonde = LaurentPoly::one(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vandermonde *= LaurentPoly::variable(i, n) - LaurentPoly::variable(j, n);

    return exact_divide(numerator, vandermonde).scaled(v.inverse());
}

}  // namespace satake
