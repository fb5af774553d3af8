#include "gtype/ratfunc.hpp"

#include <stdexcept>

namespace gtype {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) { den_ = Poly(Rational(1)); return; }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) { num_ = num_ / g; den_ = den_ / g; }
    Rational lc = den_.leading();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    // cross-cancel before multiplying to keep degrees down
    Poly g1 = poly_gcd(a.num_, b.den_);
    Poly g2 = poly_gcd(b.num_, a.den_);
    Poly an = g1.degree() > 0 ? a.num_ / g1 : a.num_;
    Poly bd = g1.degree() > 0 ? b.den_ / g1 : b.den_;
    Poly bn = g2.degree() > 0 ? b.num_ / g2 : b.num_;
    Poly ad = g2.degree() > 0 ? a.den_ / g2 : a.den_;
    return RationalFunction(an * bn, ad * bd);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return a * b.inverse();
}

Rational RationalFunction::eval(const Rational& t) const {
    Rational d = den_.eval(t);
    if (d.is_zero()) throw std::domain_error("RationalFunction: pole at evaluation point");
    return num_.eval(t) / d;
}

RationalFunction RationalFunction::compose(const RationalFunction& s) const {
    // evaluate num and den at s by Horner over Q(t)
    RationalFunction n, d;
    for (size_t i = num_.coeffs().size(); i-- > 0;) n = n * s + RationalFunction(num_.coeffs()[i]);
    for (size_t i = den_.coeffs().size(); i-- > 0;) d = d * s + RationalFunction(den_.coeffs()[i]);
    return n / d;
}

RationalFunction RationalFunction::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(1), base = *this;
    uint64_t k = static_cast<uint64_t>(e);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

} // namespace gtype
