// Elliptic curves in long Weierstrass form over an exact field.
//
// The coefficient field is a template parameter so the same invariant and
// division-polynomial formulas run over Q (concrete curves) and over Q(t)
// (symbolic identities for parameterized families).  Division polynomials
// use the univariate convention: odd indices give psi_m in x directly;
// even indices m >= 4 give psi_m with the psi_2 factor removed, and m = 2
// gives psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.

#ifndef GTYPE_CURVES_HPP
#define GTYPE_CURVES_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gtype/roots.hpp"
#include "gtype/torsion.hpp"

namespace gtype {

template <class K>
struct WeierstrassCurve {
    K a1, a2, a3, a4, a6;
};

template <class K>
struct CurveInvariants {
    K b2, b4, b6, b8, c4, c6, disc;
};

template <class K>
CurveInvariants<K> curve_invariants(const WeierstrassCurve<K>& e) {
    CurveInvariants<K> v;
    v.b2 = e.a1 * e.a1 + K(4) * e.a2;
    v.b4 = K(2) * e.a4 + e.a1 * e.a3;
    v.b6 = e.a3 * e.a3 + K(4) * e.a6;
    v.b8 = e.a1 * e.a1 * e.a6 + K(4) * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 -
           e.a4 * e.a4;
    v.c4 = v.b2 * v.b2 - K(24) * v.b4;
    v.c6 = -(v.b2 * v.b2 * v.b2) + K(36) * v.b2 * v.b4 - K(216) * v.b6;
    v.disc = -(v.b2 * v.b2) * v.b8 - K(8) * (v.b4 * v.b4 * v.b4) - K(27) * (v.b6 * v.b6) +
             K(9) * v.b2 * v.b4 * v.b6;
    return v;
}

template <class K>
Polynomial<K> division_polynomial(const WeierstrassCurve<K>& e, unsigned m) {
    if (m < 1 || m > 12) throw std::invalid_argument("division_polynomial: 1 <= m <= 12");
    CurveInvariants<K> v = curve_invariants(e);
    using P = Polynomial<K>;
    P F(std::vector<K>{v.b6, K(2) * v.b4, v.b2, K(4)});
    std::map<unsigned, P> t;
    t[0] = P();
    t[1] = P(K(1));
    t[2] = P(K(1));
    t[3] = P(std::vector<K>{v.b8, K(3) * v.b6, K(3) * v.b4, v.b2, K(3)});
    t[4] = P(std::vector<K>{v.b4 * v.b8 - v.b6 * v.b6, v.b2 * v.b8 - v.b4 * v.b6, K(10) * v.b8,
                            K(10) * v.b6, K(5) * v.b4, v.b2, K(2)});
    P F2 = F * F;
    // t_m for the psi recurrences; even entries carry psi_2 removed
    std::function<P(unsigned)> tm = [&](unsigned k) -> P {
        auto it = t.find(k);
        if (it != t.end()) return it->second;
        P r;
        if (k % 2 == 1) {
            unsigned j = (k - 1) / 2;
            if (j % 2 == 0)
                r = F2 * tm(j + 2) * tm(j).pow(3) - tm(j - 1) * tm(j + 1).pow(3);
            else
                r = tm(j + 2) * tm(j).pow(3) - F2 * tm(j - 1) * tm(j + 1).pow(3);
        } else {
            unsigned j = k / 2;
            r = tm(j) * (tm(j + 2) * tm(j - 1) * tm(j - 1) - tm(j - 2) * tm(j + 1) * tm(j + 1));
        }
        t[k] = r;
        return r;
    };
    if (m == 2) return F;
    return tm(m);
}

using EllipticCurve = WeierstrassCurve<Rational>;

// [a1,a2,a3,a4,a6], or the short form [A,B] meaning y^2 = x^3 + Ax + B
EllipticCurve curve_from_coeffs(const std::vector<Rational>& coeffs);

struct FullInvariants {
    Rational b2, b4, b6, b8, c4, c6, disc, j;
};
// throws std::domain_error for a singular model
FullInvariants invariants(const EllipticCurve& e);
Rational j_invariant(const EllipticCurve& e);
Rational curve_discriminant(const EllipticCurve& e);

struct Point {
    bool infinity = true;
    Rational x, y;
    static Point at_infinity() { return Point{}; }
    static Point affine(Rational x, Rational y) { return Point{false, std::move(x), std::move(y)}; }
    friend bool operator==(const Point& p, const Point& q) {
        if (p.infinity || q.infinity) return p.infinity == q.infinity;
        return p.x == q.x && p.y == q.y;
    }
    friend bool operator<(const Point& p, const Point& q) {
        if (p.infinity != q.infinity) return p.infinity;
        if (p.x != q.x) return p.x < q.x;
        return p.y < q.y;
    }
};

bool on_curve(const EllipticCurve& e, const Point& p);
Point negate_point(const EllipticCurve& e, const Point& p);
Point add_points(const EllipticCurve& e, const Point& p, const Point& q);
Point multiply_point(const EllipticCurve& e, const Point& p, long long n);
size_t point_order(const EllipticCurve& e, const Point& p, size_t cap = 16);

// isomorphic integral model: (x, y) -> (u^2 x, u^3 y) clearing denominators
EllipticCurve integral_model(const EllipticCurve& e);

// E(Q)_tors by division-polynomial root scan plus group-law closure;
// the result is certified to be on the rational torsion list
TorsionStructure rational_torsion(const EllipticCurve& e);
std::vector<Point> rational_torsion_points(const EllipticCurve& e);

EllipticCurve quadratic_twist(const EllipticCurve& e, const Rational& d);

// same Qbar-class and actually Q-isomorphic (j not 0 or 1728 required for
// the latter to be decided by the c4/c6 square test)
bool q_isomorphic(const EllipticCurve& e1, const EllipticCurve& e2);
// squarefree twist parameter d with e2 iso to twist(e1, d); requires equal
// j-invariants, j not in {0, 1728}
Rational twist_parameter(const EllipticCurve& e1, const EllipticCurve& e2);

// an integral model with the given j-invariant
EllipticCurve curve_from_j(const Rational& j);

nlohmann::ordered_json curve_to_json(const EllipticCurve& e);
EllipticCurve curve_from_json(const nlohmann::json& j);

} // namespace gtype

#endif
