#pragma once

#include <map>
#include <string>

#include "satake/laurent.hpp"
#include "satake/padic.hpp"
#include "satake/symfun.hpp"

namespace satake {

// Element of the spherical Hecke algebra H_K of GL_n(Q_p) in the
// double-coset basis T_lambda = 1_{K p^lambda K}. The identity is
// T_{(0,...,0)}.
class HeckeElement {
public:
    HeckeElement(int n, unsigned long p) : n_(n), p_(p) {}
    static HeckeElement identity(int n, unsigned long p);
    static HeckeElement basis(const Partition& lambda, unsigned long p);

    int arity() const { return n_; }
    unsigned long prime() const { return p_; }
    const std::map<Partition, QuadScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void set_coeff(const Partition& lambda, const QuadScalar& c);
    QuadScalar coeff(const Partition& lambda) const;

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement scaled(const QuadScalar& c) const;
    bool operator==(const HeckeElement& o) const {
        return n_ == o.n_ && p_ == o.p_ && terms_ == o.terms_;
    }

    std::string to_string() const;  // e.g. "T(2,0) + 4*T(1,1)"

private:
    int n_;
    unsigned long p_;
    std::map<Partition, QuadScalar> terms_;
};

// 2<lambda, rho> = sum_i lambda_i (n + 1 - 2i).
long rho_pairing_doubled(const Partition& lambda);

// Satake image of T_lambda in closed form:
//   p^{<lambda,rho>} P_lambda(x; 1/p).
// W-invariant; leading coefficient at x^lambda is p^{<lambda,rho>}.
LaurentPoly satake_closed_form(const Partition& lambda, unsigned long p);

// Satake image assembled from the GL_2 constant-term enumeration; the
// verification path for the closed form.
LaurentPoly satake_oracle(const Partition& lambda, unsigned long p);

// Transform of a general element: sum of coeff * satake_closed_form.
LaurentPoly satake_transform(const HeckeElement& h);

// Inverse transform on the invariant ring, by peeling leading m-basis terms
// (the Satake images are unitriangular). Throws on non-invariant input.
HeckeElement expand_in_satake_basis(const LaurentPoly& f, unsigned long p);

// Convolution computed on the polynomial side of the isomorphism.
HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);

// Value of the character of H_K attached to the W-orbit of chi on T_lambda.
QuadScalar spherical_eigenvalue(const Partition& lambda,
                                const std::vector<QuadScalar>& chi, unsigned long p);

}  // namespace satake
