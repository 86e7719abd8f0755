#include "satake/quad_scalar.hpp"

#include <stdexcept>

namespace satake {

QuadScalar::QuadScalar(Rat a, Rat b, unsigned long p)
    : a_(std::move(a)), b_(std::move(b)), p_(p) {
    if (b_ == 0) {
        p_ = 0;
    } else {
        if (!is_prime(p_))
            throw std::invalid_argument("QuadScalar: p = " + std::to_string(p) +
                                        " is not prime");
    }
}

unsigned long QuadScalar::join_prime(const QuadScalar& x, const QuadScalar& y) {
    if (x.p_ == 0) return y.p_;
    if (y.p_ == 0 || x.p_ == y.p_) return x.p_;
    throw std::invalid_argument("QuadScalar: mixed primes " + std::to_string(x.p_) +
                                " and " + std::to_string(y.p_));
}

QuadScalar QuadScalar::operator-() const {
    QuadScalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const {
    unsigned long p = join_prime(*this, o);
    return QuadScalar(a_ + o.a_, b_ + o.b_, p != 0 ? p : 2);
}

QuadScalar QuadScalar::operator-(const QuadScalar& o) const {
    return *this + (-o);
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
    unsigned long p = join_prime(*this, o);
    Rat pr = p == 0 ? Rat(0) : Rat(static_cast<long>(p));
    // (a + b s)(c + d s) = (ac + bd p) + (ad + bc) s
    return QuadScalar(a_ * o.a_ + b_ * o.b_ * pr, a_ * o.b_ + b_ * o.a_,
                      p != 0 ? p : 2);
}

QuadScalar QuadScalar::inverse() const {
    if (is_zero()) throw std::domain_error("QuadScalar: division by zero");
    if (b_ == 0) return QuadScalar(make_rat(a_.get_den(), a_.get_num()));
    Rat pr(static_cast<long>(p_));
    Rat norm = a_ * a_ - pr * b_ * b_;  // nonzero: sqrt(p) is irrational
    return QuadScalar(a_ / norm, -b_ / norm, p_);
}

QuadScalar QuadScalar::operator/(const QuadScalar& o) const {
    return *this * o.inverse();
}

std::strong_ordering QuadScalar::operator<=>(const QuadScalar& o) const {
    int c = cmp(a_, o.a_);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    c = cmp(b_, o.b_);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

std::string coeff_str(const Rat& q, bool with_s) {
    if (!with_s) return rat_to_string(q);
    if (q == 1) return "s";
    if (q == -1) return "-s";
    if (q.get_den() == 1) return rat_to_string(q) + "s";
    return "(" + rat_to_string(q) + ")s";
}

}  // namespace

std::string QuadScalar::to_string() const {
    if (is_zero()) return "0";
    if (b_ == 0) return rat_to_string(a_);
    if (a_ == 0) return coeff_str(b_, true);
    std::string s = rat_to_string(a_);
    if (b_ > 0) s += "+";
    return s + coeff_str(b_, true);
}

QuadScalar half_power(unsigned long p, long k) {
    if (!is_prime(p)) throw std::invalid_argument("half_power: p not prime");
    if (k % 2 == 0) return QuadScalar(rat_pow(p, k / 2));
    // k odd, so k - 1 is even and the division is exact
    return QuadScalar(Rat(0), rat_pow(p, (k - 1) / 2), p);
}

QuadScalar quad_from_string(const std::string& s, unsigned long p) {
    if (s.empty()) throw std::invalid_argument("empty scalar literal");
    // split into summands at '+' / '-' that are not part of an exponent
    QuadScalar result(Rat(0));
    size_t i = 0;
    while (i < s.size()) {
        size_t j = i;
        if (s[j] == '+' || s[j] == '-') ++j;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term == "+" || term == "-" || term.empty())
            throw std::invalid_argument("bad scalar literal: " + s);
        if (term.front() == '+') term.erase(term.begin());
        bool has_s = false;
        if (!term.empty() && term.back() == 's') {
            has_s = true;
            term.pop_back();
            if (!term.empty() && term.back() == '*') term.pop_back();
        }
        Rat c;
        if (term.empty() || term == "+") c = 1;
        else if (term == "-") c = -1;
        else c = rat_from_string(term);
        if (has_s) result += QuadScalar(Rat(0), c, p);
        else result += QuadScalar(c);
        i = j;
    }
    return result;
}

}  // namespace satake
