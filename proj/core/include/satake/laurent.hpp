#pragma once

#include <map>
#include <string>
#include <vector>

#include "satake/perm.hpp"
#include "satake/quad_scalar.hpp"

namespace satake {

// Exponent vector of a Laurent monomial x1^{e1} ... xn^{en}; entries may be
// negative. Identified with the coset diag(p^{e1}, ..., p^{en}) of the
// maximal torus modulo its maximal compact subgroup.
using ExpVec = std::vector<int>;

// Sparse Laurent polynomial in n variables over Q(sqrt p): the group algebra
// of Z^n. Terms are kept in lexicographic exponent order and no stored
// coefficient is zero, so printing and iteration are deterministic.
class LaurentPoly {
public:
    explicit LaurentPoly(int n) : n_(n) {}

    static LaurentPoly zero(int n) { return LaurentPoly(n); }
    static LaurentPoly one(int n);
    static LaurentPoly monomial(ExpVec e, QuadScalar c = QuadScalar(1));
    static LaurentPoly variable(int i, int n);  // x_{i+1}, 0-based index

    int arity() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, QuadScalar>& terms() const { return terms_; }

    QuadScalar coeff(const ExpVec& e) const;
    void set_coeff(const ExpVec& e, const QuadScalar& c);  // erases on zero

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const QuadScalar& c) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

    // Sum over terms of coeff * prod chi_i^{e_i}; chi must have n nonzero
    // coordinates.
    QuadScalar eval(const std::vector<QuadScalar>& chi) const;

    // Variable permutation: (w.f)(x_1, ..., x_n) = f(x_{w^{-1}(1)}, ...).
    LaurentPoly act(const Perm& w) const;

    // e.g. "2*x1^2*x2^-1 + (1/2)s*x2"
    std::string to_string() const;

private:
    int n_;
    std::map<ExpVec, QuadScalar> terms_;

    void check_arity(const LaurentPoly& o) const;
};

}  // namespace satake
