#include "satake/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace satake {

bool WOrbit::contains(const OrbitPoint& q) const {
    return std::binary_search(points.begin(), points.end(), q);
}

OrbitPoint act_on_point(const Perm& w, const OrbitPoint& chi) {
    Perm winv = inverse_perm(w);
    OrbitPoint out(chi.size());
    for (size_t i = 0; i < chi.size(); ++i) out[i] = chi[winv[i]];
    return out;
}

WOrbit orbit(const OrbitPoint& chi) {
    for (const auto& c : chi)
        if (c.is_zero()) throw std::invalid_argument("orbit: zero coordinate");
    int n = static_cast<int>(chi.size());
    WOrbit o;
    for (const Perm& w : all_permutations(n)) o.points.push_back(act_on_point(w, chi));
    std::sort(o.points.begin(), o.points.end());
    o.points.erase(std::unique(o.points.begin(), o.points.end()), o.points.end());
    return o;
}

bool is_regular(const WOrbit& o) {
    if (o.points.empty()) return false;
    size_t fact = 1;
    for (size_t k = 2; k <= o.points.front().size(); ++k) fact *= k;
    return o.size() == fact;
}

namespace {

// e_j(chi) for j = 1..n
std::vector<QuadScalar> elementary_values(const OrbitPoint& chi) {
    int n = static_cast<int>(chi.size());
    std::vector<QuadScalar> e(n + 1, QuadScalar(0));
    e[0] = QuadScalar(1);
    for (int i = 0; i < n; ++i)
        for (int j = std::min(i + 1, n); j >= 1; --j) e[j] += e[j - 1] * chi[i];
    return e;
}

int intpow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// e_j of commuting matrices, j = 0..n
std::vector<QuadMatrix> elementary_of_matrices(const std::vector<QuadMatrix>& x) {
    int n = static_cast<int>(x.size());
    int d = x.front().rows();
    std::vector<QuadMatrix> e(n + 1, QuadMatrix(d, d));
    e[0] = QuadMatrix::identity(d);
    for (int i = 0; i < n; ++i)
        for (int j = std::min(i + 1, n); j >= 1; --j)
            e[j] = e[j] + e[j - 1] * x[i];
    return e;
}

}  // namespace

QuotientModule build_quotient(const OrbitPoint& chi, unsigned long p) {
    int n = static_cast<int>(chi.size());
    if (n < 1 || n > 4)
        throw std::invalid_argument("build_quotient: n must be in {1,...,4}");
    for (const auto& c : chi)
        if (c.is_zero()) throw std::invalid_argument("build_quotient: zero coordinate");

    std::vector<QuadScalar> ev = elementary_values(chi);

    // intermediate algebra Q0 = tensor of n one-variable quotients by the
    // characteristic polynomial of chi; basis x^alpha, alpha in {0..n-1}^n
    int dim0 = intpow(n, n);
    auto index_of = [&](const std::vector<int>& alpha) {
        int idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * n + alpha[i];
        return idx;
    };
    auto alpha_of = [&](int idx) {
        std::vector<int> alpha(n);
        for (int i = n - 1; i >= 0; --i) {
            alpha[i] = idx % n;
            idx /= n;
        }
        return alpha;
    };

    // x_i^n = e_1 x_i^{n-1} - e_2 x_i^{n-2} + ... + (-1)^{n+1} e_n
    std::vector<QuadScalar> reduction(n);
    for (int k = 1; k <= n; ++k)
        reduction[n - k] = (k % 2 == 1) ? ev[k] : -ev[k];

    // x_i as a sparse column map; each column has at most n nonzeros, so
    // everything below applies operators without dense matrix products
    using SparseCol = std::vector<std::pair<int, QuadScalar>>;
    std::vector<std::vector<SparseCol>> x_cols(n, std::vector<SparseCol>(dim0));
    for (int i = 0; i < n; ++i) {
        for (int col = 0; col < dim0; ++col) {
            std::vector<int> alpha = alpha_of(col);
            if (alpha[i] + 1 < n) {
                ++alpha[i];
                x_cols[i][col].emplace_back(index_of(alpha), QuadScalar(1));
            } else {
                for (int k = 0; k < n; ++k) {
                    if (reduction[k].is_zero()) continue;
                    std::vector<int> beta = alpha;
                    beta[i] = k;
                    x_cols[i][col].emplace_back(index_of(beta), reduction[k]);
                }
            }
        }
    }
    auto apply_x = [&](int i, const std::map<int, QuadScalar>& v) {
        std::map<int, QuadScalar> out;
        for (const auto& [idx, c] : v)
            for (const auto& [row, m] : x_cols[i][idx]) {
                QuadScalar& slot = out[row];
                slot += c * m;
                if (slot.is_zero()) out.erase(row);
            }
        return out;
    };

    // relation subspace S = sum_j image(e_j(x) - e_j(chi)); the column of
    // e_j(x) at a basis vector is accumulated with the sparse operators.
    // The span is kept as a fully reduced echelon basis the whole time:
    // every stored row is a pivot plus entries in non-pivot columns only,
    // which keeps both the work and the coefficient growth small.
    struct EchRow {
        int pivot;
        std::vector<QuadScalar> v;  // normalized: v[pivot] == 1
    };
    std::vector<EchRow> ech;
    auto reduce_vec = [&](std::vector<QuadScalar>& v) {
        for (const EchRow& er : ech) {
            if (v[er.pivot].is_zero()) continue;
            QuadScalar f = v[er.pivot];
            for (int k = 0; k < dim0; ++k)
                if (!er.v[k].is_zero()) v[k] -= f * er.v[k];
        }
    };
    auto insert_vec = [&](std::vector<QuadScalar> v) {
        reduce_vec(v);
        int piv = -1;
        for (int k = 0; k < dim0; ++k)
            if (!v[k].is_zero()) {
                piv = k;
                break;
            }
        if (piv < 0) return;
        QuadScalar inv = v[piv].inverse();
        for (int k = piv; k < dim0; ++k)
            if (!v[k].is_zero()) v[k] *= inv;
        for (EchRow& er : ech) {
            if (er.v[piv].is_zero()) continue;
            QuadScalar f = er.v[piv];
            for (int k = 0; k < dim0; ++k)
                if (!v[k].is_zero()) er.v[k] -= f * v[k];
        }
        ech.push_back({piv, std::move(v)});
    };

    for (int col = 0; col < dim0; ++col) {
        std::vector<std::map<int, QuadScalar>> e_col(n + 1);
        e_col[0][col] = QuadScalar(1);
        for (int i = 0; i < n; ++i) {
            for (int j = std::min(i + 1, n); j >= 1; --j) {
                for (const auto& [row, c] : apply_x(i, e_col[j - 1])) {
                    QuadScalar& slot = e_col[j][row];
                    slot += c;
                    if (slot.is_zero()) e_col[j].erase(row);
                }
            }
        }
        for (int j = 1; j <= n; ++j) {
            QuadScalar& diag = e_col[j][col];
            diag -= ev[j];
            if (diag.is_zero()) e_col[j].erase(col);
            std::vector<QuadScalar> v(dim0, QuadScalar(0));
            for (const auto& [row, c] : e_col[j]) v[row] = c;
            insert_vec(std::move(v));
        }
    }
    int rank_s = static_cast<int>(ech.size());

    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    if (dim0 - rank_s != fact)
        throw std::logic_error("build_quotient: quotient dimension is not n!");

    std::vector<bool> is_pivot(dim0, false);
    for (const EchRow& er : ech) is_pivot[er.pivot] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < dim0; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    // reduce v modulo S, then read off free coordinates
    auto project = [&](std::vector<QuadScalar> v) {
        reduce_vec(v);
        std::vector<QuadScalar> out;
        out.reserve(free_cols.size());
        for (int c : free_cols) out.push_back(v[c]);
        return out;
    };

    QuotientModule q;
    q.n = n;
    q.p = p;
    q.dim = static_cast<int>(fact);
    for (int c : free_cols) {
        std::vector<int> alpha = alpha_of(c);
        q.basis_tags.push_back(ExpVec(alpha.begin(), alpha.end()));
    }
    for (int i = 0; i < n; ++i) {
        QuadMatrix m(q.dim, q.dim);
        for (size_t bcol = 0; bcol < free_cols.size(); ++bcol) {
            std::vector<QuadScalar> v(dim0, QuadScalar(0));
            for (const auto& [row, c] : x_cols[i][free_cols[bcol]]) v[row] = c;
            std::vector<QuadScalar> w = project(std::move(v));
            for (int r = 0; r < q.dim; ++r) m.at(r, static_cast<int>(bcol)) = w[r];
        }
        q.mult_ops.push_back(std::move(m));
    }
    return q;
}

bool annihilator_check(const QuotientModule& q, const OrbitPoint& chi) {
    if (static_cast<int>(chi.size()) != q.n) return false;
    std::vector<QuadScalar> ev = elementary_values(chi);
    std::vector<QuadMatrix> e_mats = elementary_of_matrices(q.mult_ops);
    for (int j = 1; j <= q.n; ++j)
        if (!(e_mats[j] == QuadMatrix::identity(q.dim).scaled(ev[j]))) return false;
    return true;
}

std::map<OrbitPoint, int> composition_factors(const QuotientModule& q, const WOrbit& o) {
    std::map<OrbitPoint, int> mult;
    for (const OrbitPoint& point : o.points) {
        std::vector<QuadMatrix> powered;
        for (int i = 0; i < q.n; ++i) {
            QuadMatrix shifted =
                q.mult_ops[i] - QuadMatrix::identity(q.dim).scaled(point[i]);
            powered.push_back(shifted.pow(q.dim));
        }
        int nullity = q.dim - rank(vstack(powered));
        if (nullity > 0) mult[point] = nullity;
    }
    return mult;
}

}  // namespace satake
