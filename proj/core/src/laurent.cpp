#include "satake/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace satake {

namespace {

QuadScalar quad_pow(const QuadScalar& x, int k) {
    if (k == 0) return QuadScalar(1);
    QuadScalar base = k > 0 ? x : x.inverse();
    int e = k > 0 ? k : -k;
    QuadScalar r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace

LaurentPoly LaurentPoly::one(int n) {
    return monomial(ExpVec(n, 0));
}

LaurentPoly LaurentPoly::monomial(ExpVec e, QuadScalar c) {
    LaurentPoly f(static_cast<int>(e.size()));
    if (!c.is_zero()) f.terms_.emplace(std::move(e), std::move(c));
    return f;
}

LaurentPoly LaurentPoly::variable(int i, int n) {
    if (i < 0 || i >= n) throw std::out_of_range("variable index");
    ExpVec e(n, 0);
    e[i] = 1;
    return monomial(std::move(e));
}

void LaurentPoly::check_arity(const LaurentPoly& o) const {
    if (n_ != o.n_)
        throw std::invalid_argument("LaurentPoly arity mismatch: " +
                                    std::to_string(n_) + " vs " + std::to_string(o.n_));
}

QuadScalar LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QuadScalar(0) : it->second;
}

void LaurentPoly::set_coeff(const ExpVec& e, const QuadScalar& c) {
    if (static_cast<int>(e.size()) != n_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero()) terms_.erase(e);
    else terms_[e] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_arity(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    return *this + (-o);
}

LaurentPoly LaurentPoly::scaled(const QuadScalar& c) const {
    LaurentPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_arity(o);
    LaurentPoly r(n_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e(n_);
            for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                QuadScalar c = c1 * c2;
                if (!c.is_zero()) r.terms_.emplace(std::move(e), std::move(c));
            } else {
                it->second += c1 * c2;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

QuadScalar LaurentPoly::eval(const std::vector<QuadScalar>& chi) const {
    if (static_cast<int>(chi.size()) != n_)
        throw std::invalid_argument("eval: wrong number of coordinates");
    for (const auto& x : chi)
        if (x.is_zero())
            throw std::domain_error("eval: zero coordinate in character");
    QuadScalar sum(0);
    for (const auto& [e, c] : terms_) {
        QuadScalar t = c;
        for (int i = 0; i < n_; ++i) t *= quad_pow(chi[i], e[i]);
        sum += t;
    }
    return sum;
}

LaurentPoly LaurentPoly::act(const Perm& w) const {
    if (static_cast<int>(w.size()) != n_ || !is_valid_perm(w))
        throw std::invalid_argument("act: invalid permutation");
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) {
        ExpVec we(n_);
        for (int i = 0; i < n_; ++i) we[w[i]] = e[i];
        r.terms_.emplace(std::move(we), c);
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
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
        bool has_var = false;
        for (int i = 0; i < n_; ++i)
            if (e[i] != 0) has_var = true;
        bool needs_paren = cs.find('+') != std::string::npos ||
                           (cs.find('-', 1) != std::string::npos);
        if (!has_var) {
            os << (needs_paren ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") {
            os << (needs_paren ? "(" + cs + ")" : cs) << "*";
        }
        bool first_var = true;
        for (int i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "x" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace satake
