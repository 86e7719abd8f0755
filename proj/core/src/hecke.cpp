#include "satake/hecke.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace satake {

HeckeElement HeckeElement::identity(int n, unsigned long p) {
    return basis(Partition(n, 0), p);
}

HeckeElement HeckeElement::basis(const Partition& lambda, unsigned long p) {
    if (!is_dominant(lambda))
        throw std::invalid_argument("HeckeElement: lambda must be dominant");
    HeckeElement h(static_cast<int>(lambda.size()), p);
    h.terms_.emplace(lambda, QuadScalar(1));
    return h;
}

void HeckeElement::set_coeff(const Partition& lambda, const QuadScalar& c) {
    if (static_cast<int>(lambda.size()) != n_ || !is_dominant(lambda))
        throw std::invalid_argument("HeckeElement: bad partition");
    if (c.is_zero()) terms_.erase(lambda);
    else terms_[lambda] = c;
}

QuadScalar HeckeElement::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? QuadScalar(0) : it->second;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    if (n_ != o.n_ || p_ != o.p_)
        throw std::invalid_argument("HeckeElement: mixed algebras");
    HeckeElement r = *this;
    for (const auto& [l, c] : o.terms_) {
        auto it = r.terms_.find(l);
        if (it == r.terms_.end()) r.terms_.emplace(l, c);
        else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

HeckeElement HeckeElement::scaled(const QuadScalar& c) const {
    HeckeElement r(n_, p_);
    if (c.is_zero()) return r;
    for (const auto& [l, x] : terms_) r.terms_.emplace(l, x * c);
    return r;
}

std::string HeckeElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print from the lexicographically greatest partition down
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [l, c] = *it;
        std::string cs = c.to_string();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        bool paren = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
        if (cs != "1") os << (paren ? "(" + cs + ")" : cs) << "*";
        os << "T(";
        for (size_t i = 0; i < l.size(); ++i) {
            if (i) os << ",";
            os << l[i];
        }
        os << ")";
    }
    return os.str();
}

long rho_pairing_doubled(const Partition& lambda) {
    long s = 0;
    int n = static_cast<int>(lambda.size());
    for (int i = 0; i < n; ++i) s += static_cast<long>(lambda[i]) * (n - 1 - 2 * i);
    return s;
}

LaurentPoly satake_closed_form(const Partition& lambda, unsigned long p) {
    if (!is_dominant(lambda))
        throw std::invalid_argument("satake_closed_form: lambda not dominant");

    using Key = std::pair<unsigned long, Partition>;
    static std::map<Key, LaurentPoly> cache;
    static std::mutex mtx;
    Key key{p, lambda};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    QuadScalar t(make_rat(1, static_cast<long>(p)));
    LaurentPoly result =
        hall_littlewood(lambda, t).scaled(half_power(p, rho_pairing_doubled(lambda)));

    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::move(key), result);
    return result;
}

LaurentPoly satake_oracle(const Partition& lambda, unsigned long p) {
    if (lambda.size() != 2)
        throw std::invalid_argument("satake_oracle: n = 2 only");
    LaurentPoly f(2);
    int total = lambda[0] + lambda[1];
    for (int a0 = lambda[1]; a0 <= lambda[0]; ++a0) {
        int a1 = total - a0;
        Rat ct = constant_term_oracle(lambda, {a0, a1}, p);
        if (ct == 0) continue;
        QuadScalar twist = half_power(p, -(a0 - a1));
        f.set_coeff(ExpVec{a0, a1}, twist * QuadScalar(ct));
    }
    if (!is_invariant(f))
        throw std::logic_error("satake_oracle: image is not W-invariant");
    return f;
}

LaurentPoly satake_transform(const HeckeElement& h) {
    LaurentPoly f(h.arity());
    for (const auto& [lambda, c] : h.terms())
        f += satake_closed_form(lambda, h.prime()).scaled(c);
    return f;
}

HeckeElement expand_in_satake_basis(const LaurentPoly& f, unsigned long p) {
    if (!is_invariant(f))
        throw std::invalid_argument("expand_in_satake_basis: input not W-invariant");
    HeckeElement h(f.arity(), p);
    LaurentPoly rem = f;
    while (!rem.is_zero()) {
        const auto& [lead, c] = *rem.terms().rbegin();
        // lex-greatest exponent of an invariant polynomial is dominant
        QuadScalar coeff = c / half_power(p, rho_pairing_doubled(lead));
        h.set_coeff(lead, coeff);
        rem -= satake_closed_form(lead, p).scaled(coeff);
    }
    return h;
}

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
    if (a.arity() != b.arity() || a.prime() != b.prime())
        throw std::invalid_argument("multiply: mixed algebras");
    return expand_in_satake_basis(satake_transform(a) * satake_transform(b), a.prime());
}

QuadScalar spherical_eigenvalue(const Partition& lambda,
                                const std::vector<QuadScalar>& chi, unsigned long p) {
    return satake_closed_form(lambda, p).eval(chi);
}

}  // namespace satake
