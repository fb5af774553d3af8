// Exact rationals over BigInt, always in lowest terms with positive
// denominator.  This is the coefficient field for the whole toolkit; no
// floating point appears anywhere downstream.

#ifndef GTYPE_RATIONAL_HPP
#define GTYPE_RATIONAL_HPP

#include <string>
#include <string_view>

#include "gtype/bigint.hpp"

namespace gtype {

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const BigInt& n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    // accepts "n", "-n", "n/d"
    static Rational from_string(std::string_view s);
    std::string str() const;

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational pow(long long e) const;  // negative exponents allowed for nonzero values

    size_t hash() const;

  private:
    BigInt num_;
    BigInt den_; // > 0
    void normalize();
};

} // namespace gtype

template <> struct std::hash<gtype::Rational> {
    size_t operator()(const gtype::Rational& v) const { return v.hash(); }
};

#endif
