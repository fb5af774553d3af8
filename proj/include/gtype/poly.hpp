// Dense univariate polynomials over an exact field K.
//
// Coefficients are stored lowest-degree first and trailing zeros are
// trimmed, so the zero polynomial is the empty vector.  Degrees in this
// toolkit stay small (the largest tabulated map has degree 48), hence
// dense storage and schoolbook multiplication throughout.
//
// K must provide: default ctor (= 0), construction from long long,
// +, -, *, /, unary -, ==, is_zero().  Rational and RationalFunction both
// qualify, which gives polynomials over Q and over Q(t).

#ifndef GTYPE_POLY_HPP
#define GTYPE_POLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace gtype {

template <class K>
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const K& c) { coeffs_.push_back(c); trim(); }
    Polynomial(long long c) : Polynomial(K(c)) {}
    explicit Polynomial(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial x() { return monomial(1, K(1)); }
    static Polynomial monomial(size_t deg, const K& c) {
        std::vector<K> v(deg + 1, K());
        v[deg] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<K>& coeffs() const { return coeffs_; }
    const K& operator[](size_t i) const {
        static const K zero{};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }
    const K& leading() const {
        if (is_zero()) throw std::domain_error("Polynomial: leading of zero");
        return coeffs_.back();
    }

    K eval(const K& t) const {
        K acc{};
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.coeffs_.size(), b.coeffs_.size()), K());
        for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.coeffs_.size(), b.coeffs_.size()), K());
        for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return Polynomial(std::move(r));
    }
    Polynomial operator-() const {
        std::vector<K> r(coeffs_.size(), K());
        for (size_t i = 0; i < r.size(); ++i) r[i] = -coeffs_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<K> r(a.coeffs_.size() + b.coeffs_.size() - 1, K());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const K& c, const Polynomial& p) {
        std::vector<K> r(p.coeffs_.size(), K());
        for (size_t i = 0; i < r.size(); ++i) r[i] = c * p.coeffs_[i];
        return Polynomial(std::move(r));
    }

    Polynomial& operator+=(const Polynomial& b) { *this = *this + b; return *this; }
    Polynomial& operator-=(const Polynomial& b) { *this = *this - b; return *this; }
    Polynomial& operator*=(const Polynomial& b) { *this = *this * b; return *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(uint64_t e) const {
        Polynomial r(K(1)), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    // euclidean division; divisor must be nonzero
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
        if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
        q = Polynomial();
        r = a;
        if (a.degree() < b.degree()) return;
        std::vector<K> qc(a.degree() - b.degree() + 1, K());
        while (!r.is_zero() && r.degree() >= b.degree()) {
            K c = r.leading() / b.leading();
            size_t d = static_cast<size_t>(r.degree() - b.degree());
            qc[d] = c;
            r = r - (monomial(d, c) * b);
        }
        q = Polynomial(std::move(qc));
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        Polynomial q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        Polynomial q, r;
        divmod(a, b, q, r);
        return r;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<K> r(coeffs_.size() - 1, K());
        for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = K(static_cast<long long>(i)) * coeffs_[i];
        return Polynomial(std::move(r));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / leading();
        return inv * *this;
    }

    // substitute x -> p(x)
    Polynomial compose(const Polynomial& p) const {
        Polynomial acc;
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * p + Polynomial(coeffs_[i]);
        return acc;
    }

  private:
    std::vector<K> coeffs_;
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
};

template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        Polynomial<K> r = a % b;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
}

template <class K>
Polynomial<K> squarefree_part_poly(const Polynomial<K>& p) {
    if (p.degree() <= 0) return p;
    Polynomial<K> g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return p / g;
}

// resultant via the subresultant-free euclidean recurrence over a field
template <class K>
K resultant(Polynomial<K> a, Polynomial<K> b) {
    if (a.is_zero() || b.is_zero()) return K();
    K res(1);
    bool negate = false;
    while (true) {
        long da = a.degree(), db = b.degree();
        if (db == 0) {
            // res *= lc(b)^deg(a)
            K lb = b.leading(), acc(1);
            for (long i = 0; i < da; ++i) acc = acc * lb;
            return negate ? -(res * acc) : res * acc;
        }
        Polynomial<K> r = a % b;
        if (r.is_zero()) return K();
        long dr = r.degree();
        // res(a,b) = (-1)^(da*db) lc(b)^(da-dr) res(b,r)
        if ((da * db) % 2) negate = !negate;
        K lb = b.leading(), acc(1);
        for (long i = 0; i < da - dr; ++i) acc = acc * lb;
        res = res * acc;
        a = b;
        b = r;
    }
}

template <class K>
K discriminant(const Polynomial<K>& p) {
    long n = p.degree();
    if (n < 1) throw std::domain_error("discriminant: degree < 1");
    K r = resultant(p, p.derivative());
    r = r / p.leading();
    // sign (-1)^(n(n-1)/2)
    if ((n * (n - 1) / 2) % 2) r = -r;
    return r;
}

} // namespace gtype

#endif
