// Rational functions over Q, normalized eagerly: gcd(num, den) = 1 and the
// denominator is monic, so equality is structural.

#ifndef GTYPE_RATFUNC_HPP
#define GTYPE_RATFUNC_HPP

#include "gtype/poly.hpp"
#include "gtype/rational.hpp"

namespace gtype {

using Poly = Polynomial<Rational>;

// exact-match overload selected ahead of the generic template: gcd over Q
// runs on the primitive integer form with a modular coprimality fast path
// and a primitive pseudo-remainder sequence, because the naive euclidean
// remainder sequence explodes on large inputs
Poly poly_gcd(const Poly& a, const Poly& b);

class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(long long c) : num_(Rational(c)), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(const Poly& p) : num_(p), den_(Rational(1)) {}
    RationalFunction(Poly num, Poly den);

    static RationalFunction t() { return RationalFunction(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    RationalFunction inverse() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // exact evaluation; throws on a pole
    Rational eval(const Rational& t) const;
    bool has_pole_at(const Rational& t) const { return den_.eval(t).is_zero(); }

    // substitute t -> s(t)
    RationalFunction compose(const RationalFunction& s) const;

    RationalFunction pow(long long e) const;

  private:
    Poly num_, den_;
    void normalize();
};

} // namespace gtype

#endif
