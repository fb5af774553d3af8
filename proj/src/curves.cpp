#include "gtype/curves.hpp"

#include <algorithm>
#include <set>

#include "gtype/intfactor.hpp"
#include "gtype/serialize.hpp"

namespace gtype {

EllipticCurve curve_from_coeffs(const std::vector<Rational>& coeffs) {
    EllipticCurve e;
    if (coeffs.size() == 5) {
        e = EllipticCurve{coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]};
    } else if (coeffs.size() == 2) {
        e = EllipticCurve{Rational(0), Rational(0), Rational(0), coeffs[0], coeffs[1]};
    } else {
        throw std::invalid_argument("curve_from_coeffs: expected [a1,a2,a3,a4,a6] or [A,B]");
    }
    if (curve_invariants(e).disc.is_zero())
        throw std::domain_error("curve_from_coeffs: singular model");
    return e;
}

FullInvariants invariants(const EllipticCurve& e) {
    CurveInvariants<Rational> v = curve_invariants(e);
    if (v.disc.is_zero()) throw std::domain_error("invariants: singular curve");
    return FullInvariants{v.b2, v.b4, v.b6, v.b8, v.c4, v.c6, v.disc,
                          v.c4 * v.c4 * v.c4 / v.disc};
}

Rational j_invariant(const EllipticCurve& e) { return invariants(e).j; }
Rational curve_discriminant(const EllipticCurve& e) { return invariants(e).disc; }

bool on_curve(const EllipticCurve& e, const Point& p) {
    if (p.infinity) return true;
    Rational lhs = p.y * p.y + e.a1 * p.x * p.y + e.a3 * p.y;
    Rational rhs = p.x * p.x * p.x + e.a2 * p.x * p.x + e.a4 * p.x + e.a6;
    return lhs == rhs;
}

Point negate_point(const EllipticCurve& e, const Point& p) {
    if (p.infinity) return p;
    return Point::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

Point add_points(const EllipticCurve& e, const Point& p, const Point& q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    Rational lambda, nu;
    if (p.x == q.x) {
        if (q.y == (-p.y - e.a1 * p.x - e.a3)) return Point::at_infinity();
        // doubling
        Rational den = Rational(2) * p.y + e.a1 * p.x + e.a3;
        lambda = (Rational(3) * p.x * p.x + Rational(2) * e.a2 * p.x + e.a4 - e.a1 * p.y) / den;
        nu = (-(p.x * p.x * p.x) + e.a4 * p.x + Rational(2) * e.a6 - e.a3 * p.y) / den;
    } else {
        lambda = (q.y - p.y) / (q.x - p.x);
        nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
    }
    Rational x3 = lambda * lambda + e.a1 * lambda - e.a2 - p.x - q.x;
    Rational y3 = -(lambda + e.a1) * x3 - nu - e.a3;
    return Point::affine(x3, y3);
}

Point multiply_point(const EllipticCurve& e, const Point& p, long long n) {
    if (n < 0) return multiply_point(e, negate_point(e, p), -n);
    Point acc = Point::at_infinity(), base = p;
    while (n) {
        if (n & 1) acc = add_points(e, acc, base);
        base = add_points(e, base, base);
        n >>= 1;
    }
    return acc;
}

size_t point_order(const EllipticCurve& e, const Point& p, size_t cap) {
    Point acc = p;
    size_t n = 1;
    while (!acc.infinity) {
        acc = add_points(e, acc, p);
        if (++n > cap) throw std::runtime_error("point_order: exceeds cap (non-torsion point?)");
    }
    return n;
}

EllipticCurve integral_model(const EllipticCurve& e) {
    BigInt u(1);
    for (const Rational* c : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6})
        u = BigInt::lcm(u, c->den());
    Rational u1(u), u2 = u1 * u1;
    return EllipticCurve{e.a1 * u1, e.a2 * u2, e.a3 * u1 * u2, e.a4 * u2 * u2, e.a6 * u2 * u2 * u2};
}

namespace {

std::vector<Point> torsion_points_impl(const EllipticCurve& orig) {
    EllipticCurve e = integral_model(orig);

    // candidate x-coordinates: rational roots of the prime-power division
    // polynomials (orders on the rational list divide 8, 9, 5·2, 7, 12)
    std::set<Rational> xs;
    for (unsigned m : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        Poly psi = division_polynomial(e, m);
        if (psi.degree() < 1) continue;
        for (const Rational& r : rational_roots(psi)) xs.insert(r);
    }

    std::set<Point> pts;
    pts.insert(Point::at_infinity());
    for (const Rational& x : xs) {
        // y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0
        Rational bq = e.a1 * x + e.a3;
        Rational cq = -(x * x * x + e.a2 * x * x + e.a4 * x + e.a6);
        Rational disc = bq * bq - Rational(4) * cq;
        auto s = rational_sqrt(disc);
        if (!s) continue;
        Point p1 = Point::affine(x, (-bq + *s) / Rational(2));
        Point p2 = Point::affine(x, (-bq - *s) / Rational(2));
        // only genuine torsion points enter the closure
        for (const Point& p : {p1, p2}) {
            try {
                point_order(e, p, 16);
                pts.insert(p);
            } catch (const std::runtime_error&) {
            }
        }
    }

    // close under addition
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Point> cur(pts.begin(), pts.end());
        for (const Point& p : cur) {
            for (const Point& q : cur) {
                Point s = add_points(e, p, q);
                if (pts.insert(s).second) {
                    grew = true;
                    if (pts.size() > 16) throw std::logic_error("rational_torsion: closure exceeds 16 points");
                }
            }
        }
    }
    return std::vector<Point>(pts.begin(), pts.end());
}

} // namespace

std::vector<Point> rational_torsion_points(const EllipticCurve& e) {
    return torsion_points_impl(e);
}

TorsionStructure rational_torsion(const EllipticCurve& orig) {
    EllipticCurve e = integral_model(orig);
    std::vector<Point> pts = torsion_points_impl(orig);
    size_t n = pts.size();
    size_t expo = 1;
    std::map<size_t, size_t> order_count;
    for (const Point& p : pts) {
        size_t o = point_order(e, p, 16);
        expo = std::lcm(expo, o);
        order_count[o] += 1;
    }
    if (n % expo != 0) throw std::logic_error("rational_torsion: size/exponent mismatch");
    size_t a = n / expo;
    TorsionStructure t(a, expo);
    // certification: counts of points of order dividing m must match
    for (size_t m = 1; m <= expo; ++m) {
        if (expo % m) continue;
        size_t cnt = 0;
        for (const auto& [o, c] : order_count)
            if (m % o == 0) cnt += c;
        if (cnt != std::gcd(a, m) * std::gcd(expo, m))
            throw std::logic_error("rational_torsion: structure certification failed");
    }
    // the rational torsion list: Z/M (M <= 10 or 12) and Z/2 + Z/2M (M <= 4)
    bool listed = (a == 1 && (expo <= 10 || expo == 12)) ||
                  (a == 2 && expo % 2 == 0 && expo <= 8);
    if (!listed) throw std::logic_error("rational_torsion: structure off the rational list");
    return t;
}

EllipticCurve quadratic_twist(const EllipticCurve& e, const Rational& d) {
    if (d.is_zero()) throw std::invalid_argument("quadratic_twist: d = 0");
    CurveInvariants<Rational> v = curve_invariants(e);
    return EllipticCurve{Rational(0), d * v.b2 / Rational(4), Rational(0),
                         d * d * v.b4 / Rational(2), d * d * d * v.b6 / Rational(4)};
}

bool q_isomorphic(const EllipticCurve& e1, const EllipticCurve& e2) {
    FullInvariants v1 = invariants(e1), v2 = invariants(e2);
    if (v1.j != v2.j) return false;
    if (v1.j == Rational(0) || v1.j == Rational(1728))
        throw std::invalid_argument("q_isomorphic: j in {0, 1728} needs the twist-family rules");
    // e2 = twist of e1 by d with u-scaling: c4' = u^4 d^2 c4, c6' = u^6 d^3 c6;
    // Q-isomorphic iff (c6' c4)/(c6 c4') is a square
    return is_square_rational((v2.c6 * v1.c4) / (v1.c6 * v2.c4));
}

Rational twist_parameter(const EllipticCurve& e1, const EllipticCurve& e2) {
    FullInvariants v1 = invariants(e1), v2 = invariants(e2);
    if (v1.j != v2.j) throw std::invalid_argument("twist_parameter: different j-invariants");
    if (v1.j == Rational(0) || v1.j == Rational(1728))
        throw std::invalid_argument("twist_parameter: j in {0, 1728} refused (larger twist group)");
    Rational r = (v2.c6 * v1.c4) / (v1.c6 * v2.c4);
    // squarefree representative of r modulo squares
    BigInt nd = r.num() * r.den();
    return Rational(squarefree_part(nd));
}

EllipticCurve curve_from_j(const Rational& j) {
    if (j == Rational(0)) return curve_from_coeffs({Rational(0), Rational(1)});
    if (j == Rational(1728)) return curve_from_coeffs({Rational(1), Rational(0)});
    Rational k = j - Rational(1728);
    EllipticCurve e{Rational(1), Rational(0), Rational(0), Rational(-36) / k, Rational(-1) / k};
    EllipticCurve m = integral_model(e);
    if (j_invariant(m) != j) throw std::logic_error("curve_from_j: j mismatch");
    return m;
}

nlohmann::ordered_json curve_to_json(const EllipticCurve& e) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Rational* c : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6}) arr.push_back(c->str());
    return arr;
}

EllipticCurve curve_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        if (c.is_string()) coeffs.push_back(Rational::from_string(c.get<std::string>()));
        else coeffs.push_back(Rational(c.get<long long>()));
    }
    return curve_from_coeffs(coeffs);
}

} // namespace gtype
