#include "gtype/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "gtype/intfactor.hpp"

namespace gtype {

bool is_square_rational(const Rational& q) {
    if (q.sign() < 0) return false;
    return q.num().is_perfect_square() && q.den().is_perfect_square();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    if (!q.num().is_perfect_square() || !q.den().is_perfect_square()) return std::nullopt;
    return Rational(q.num().isqrt(), q.den().isqrt());
}

bool is_cube_rational(const Rational& q) {
    return q.num().is_perfect_cube() && q.den().is_perfect_cube();
}

std::optional<Rational> rational_cbrt(const Rational& q) {
    BigInt rn, rd;
    if (!q.num().is_perfect_cube(&rn) || !q.den().is_perfect_cube(&rd)) return std::nullopt;
    return Rational(rn, rd);
}

bool is_kth_power_rational(const Rational& q, unsigned k, Rational* root) {
    if (k == 0) throw std::domain_error("is_kth_power_rational: k = 0");
    BigInt rn, rd;
    if (!q.num().is_perfect_power(k, &rn) || !q.den().is_perfect_power(k, &rd)) return false;
    if (root) *root = Rational(rn, rd);
    return true;
}

std::vector<BigInt> primitive_integer_coeffs(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("primitive_integer_coeffs: zero polynomial");
    BigInt l(1);
    for (const Rational& c : p.coeffs()) l = BigInt::lcm(l, c.den());
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    BigInt content(0);
    for (const Rational& c : p.coeffs()) {
        BigInt v = c.num() * (l / c.den());
        content = BigInt::gcd(content, v);
        out.push_back(std::move(v));
    }
    for (BigInt& v : out) v = v / content;
    return out;
}

namespace {

// exact check sum c_i u^i v^(n-i) == 0
bool is_integer_root(const std::vector<BigInt>& c, const BigInt& u, const BigInt& v) {
    size_t n = c.size() - 1;
    BigInt acc(0), upow(1);
    std::vector<BigInt> vpow(n + 1, BigInt(1));
    for (size_t i = 1; i <= n; ++i) vpow[i] = vpow[i - 1] * v;
    for (size_t i = 0; i <= n; ++i) {
        acc = acc + c[i] * upow * vpow[n - i];
        upow = upow * u;
    }
    return acc.is_zero();
}

uint64_t eval_mod(const std::vector<uint64_t>& c, uint64_t x, uint64_t p) {
    unsigned __int128 acc = 0;
    for (size_t i = c.size(); i-- > 0;)
        acc = (acc * x + c[i]) % p;
    return static_cast<uint64_t>(acc);
}

std::vector<uint64_t> reduce_mod(const std::vector<BigInt>& c, uint64_t p) {
    std::vector<uint64_t> out(c.size());
    for (size_t i = 0; i < c.size(); ++i) out[i] = c[i].mod_u64(p);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// schoolbook product reduced modulo s (monic-normalized on the fly), all mod p
std::vector<uint64_t> polymulmod_p(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                                   const std::vector<uint64_t>& s, uint64_t sinv_lead, uint64_t p) {
    std::vector<uint64_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
    size_t n = s.size() - 1;
    for (size_t d = prod.size(); d-- > n;) {
        uint64_t c = prod[d];
        if (!c) continue;
        uint64_t f = static_cast<uint64_t>(static_cast<unsigned __int128>(c) * sinv_lead % p);
        prod[d] = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t sub = static_cast<uint64_t>(static_cast<unsigned __int128>(f) * s[i] % p);
            prod[d - n + i] = (prod[d - n + i] + p - sub) % p;
        }
    }
    prod.resize(n);
    while (!prod.empty() && prod.back() == 0) prod.pop_back();
    return prod;
}

uint64_t invmod_p(uint64_t x, uint64_t p) {
    uint64_t r = 1, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<uint64_t>(static_cast<unsigned __int128>(r) * x % p);
        x = static_cast<uint64_t>(static_cast<unsigned __int128>(x) * x % p);
        e >>= 1;
    }
    return r;
}

std::vector<uint64_t> poly_gcd_mod(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
    auto mulmod = [p](uint64_t x, uint64_t y) {
        return static_cast<uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };
    auto invmod = [&](uint64_t x) {
        uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = mulmod(r, x);
            x = mulmod(x, x);
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b
        uint64_t inv = invmod(b.back());
        while (a.size() >= b.size()) {
            uint64_t f = mulmod(a.back(), inv);
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                uint64_t sub = mulmod(f, b[i]);
                a[off + i] = (a[off + i] + p - sub) % p;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

BigInt eval_big_mod(const std::vector<BigInt>& c, const BigInt& x, const BigInt& m) {
    BigInt acc(0);
    for (size_t i = c.size(); i-- > 0;) {
        acc = (acc * x + c[i]) % m;
    }
    if (acc.sign() < 0) acc = acc + m;
    return acc;
}

// rational reconstruction: find u/v with |u| <= nbound, 0 < v <= dbound,
// u = v*x mod m; returns false if no candidate emerges
bool rational_reconstruct(const BigInt& x, const BigInt& m,
                          const BigInt& nbound, const BigInt& dbound,
                          BigInt& u, BigInt& v) {
    BigInt r0 = m, r1 = x % m;
    if (r1.sign() < 0) r1 = r1 + m;
    BigInt t0(0), t1(1);
    while (!r1.is_zero() && r0 > nbound) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 > nbound || t0.is_zero()) return false;
    u = r0;
    v = t0;
    if (v.sign() < 0) { u = -u; v = -v; }
    if (v > dbound) return false;
    return true;
}

// roots of a squarefree primitive integer polynomial, via mod-p roots,
// Hensel lifting, rational reconstruction, exact verification
std::vector<Rational> roots_by_lifting(const std::vector<BigInt>& c) {
    size_t n = c.size() - 1;
    // pick a prime: p coprime to lc, S squarefree mod p
    uint64_t p = 0;
    for (uint64_t cand = 10007;; cand += 2) {
        if (!is_prime_u64(cand)) continue;
        if (c.back().mod_u64(cand) == 0) continue;
        std::vector<uint64_t> cm = reduce_mod(c, cand);
        if (cm.size() != c.size()) continue;
        // derivative mod p
        std::vector<uint64_t> dm(cm.size() - 1);
        for (size_t i = 1; i < cm.size(); ++i)
            dm[i - 1] = static_cast<uint64_t>(static_cast<unsigned __int128>(cm[i]) * (i % cand) % cand);
        while (!dm.empty() && dm.back() == 0) dm.pop_back();
        if (dm.empty()) continue;
        std::vector<uint64_t> g = poly_gcd_mod(cm, dm, cand);
        if (g.size() == 1) { p = cand; break; }
        if (cand > 2000000) throw std::runtime_error("rational_roots: no good prime found");
    }

    std::vector<uint64_t> cm = reduce_mod(c, p);
    // roots mod p via gcd(x^p - x, S): much cheaper than a residue scan
    std::vector<uint64_t> roots_mod_p;
    {
        uint64_t sinv = invmod_p(cm.back(), p);
        std::vector<uint64_t> xp{0, 1}; // x
        std::vector<uint64_t> acc{1};
        uint64_t e = p;
        while (e) {
            if (e & 1) acc = polymulmod_p(acc, xp, cm, sinv, p);
            xp = polymulmod_p(xp, xp, cm, sinv, p);
            e >>= 1;
        }
        // acc = x^p mod S; gcd(acc - x, S)
        if (acc.size() < 2) acc.resize(2, 0);
        acc[1] = (acc[1] + p - 1) % p;
        while (!acc.empty() && acc.back() == 0) acc.pop_back();
        std::vector<uint64_t> g = acc.empty() ? cm : poly_gcd_mod(cm, acc, p);
        if (g.size() <= 1) return {};
        // the root-product polynomial has small degree; scan it
        for (uint64_t r = 0; r < p && roots_mod_p.size() + 1 < g.size(); ++r)
            if (eval_mod(g, r, p) == 0) roots_mod_p.push_back(r);
    }
    if (roots_mod_p.empty()) return {};

    BigInt nbound = c.front().abs(), dbound = c.back().abs();
    BigInt target = BigInt(2) * nbound * dbound + BigInt(1);

    // derivative coefficients
    std::vector<BigInt> dc(n);
    for (size_t i = 1; i <= n; ++i) dc[i - 1] = c[i] * BigInt(static_cast<long long>(i));

    std::vector<Rational> out;
    for (uint64_t r0 : roots_mod_p) {
        // Newton-Hensel with a lifted inverse: w tracks 1/f'(x), so the
        // loop needs no modular inversions beyond the initial one mod p
        BigInt m(static_cast<long long>(p));
        BigInt x(static_cast<long long>(r0));
        uint64_t d0 = 0;
        {
            unsigned __int128 acc = 0;
            for (size_t i = dc.size(); i-- > 0;) acc = (acc * r0 + dc[i].mod_u64(p)) % p;
            d0 = static_cast<uint64_t>(acc);
        }
        if (d0 == 0) continue; // not a simple root; excluded by the squarefree choice
        BigInt w(static_cast<long long>(invmod_p(d0, p)));
        while (m < target) {
            m = m * m;
            BigInt fx = eval_big_mod(c, x, m);
            x = (x - fx * w) % m;
            if (x.sign() < 0) x = x + m;
            BigInt dfx = eval_big_mod(dc, x, m);
            BigInt corr = (BigInt(2) - dfx * w) % m;
            w = (w * corr) % m;
            if (w.sign() < 0) w = w + m;
        }
        BigInt u, v;
        if (!rational_reconstruct(x, m, nbound, dbound, u, v)) continue;
        BigInt g = BigInt::gcd(u, v);
        if (!g.is_one()) { u = u / g; v = v / g; }
        if (is_integer_root(c, u, v)) out.push_back(Rational(u, v));
    }
    return out;
}

// integer polynomial utilities for the squarefree reduction: naive rational
// euclidean remainders explode on high-degree inputs, so the squarefree
// test runs mod p and the rare non-squarefree case falls back to a
// primitive pseudo-remainder sequence over Z

std::vector<BigInt> int_derivative(const std::vector<BigInt>& c) {
    std::vector<BigInt> d(c.size() > 1 ? c.size() - 1 : 0);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * BigInt(static_cast<long long>(i));
    while (!d.empty() && d.back().is_zero()) d.pop_back();
    return d;
}

void make_primitive(std::vector<BigInt>& c) {
    BigInt content(0);
    for (const BigInt& v : c) content = BigInt::gcd(content, v);
    if (content.is_zero() || content.is_one()) return;
    for (BigInt& v : c) v = v / content;
}

// pseudo-remainder of a by b (both trimmed, deg a >= deg b >= 0)
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const BigInt& lb = b.back();
    while (a.size() >= b.size()) {
        // a = lb * a - lead(a) * x^k * b
        BigInt la = a.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] * lb;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - la * b[i];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

std::vector<BigInt> int_poly_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
    make_primitive(a);
    make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<BigInt> r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool coprime_mod_p(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    for (uint64_t p : {10007ULL, 10009ULL, 10037ULL, 10039ULL}) {
        if (a.back().mod_u64(p) == 0 || b.back().mod_u64(p) == 0) continue;
        std::vector<uint64_t> am = reduce_mod(a, p);
        std::vector<uint64_t> bm = reduce_mod(b, p);
        if (am.size() != a.size() || bm.size() != b.size()) continue;
        if (poly_gcd_mod(am, bm, p).size() == 1) return true;
    }
    return false;
}

// true when gcd(c, c') = 1 is certified by some prime; false means "maybe
// not squarefree"
bool squarefree_mod_p(const std::vector<BigInt>& c) {
    std::vector<BigInt> d = int_derivative(c);
    if (d.empty()) return false;
    for (uint64_t p : {10007ULL, 10009ULL, 10037ULL, 10039ULL, 10061ULL}) {
        if (c.back().mod_u64(p) == 0) continue;
        std::vector<uint64_t> cm = reduce_mod(c, p);
        std::vector<uint64_t> dm = reduce_mod(d, p);
        if (cm.size() != c.size() || dm.empty()) continue;
        if (poly_gcd_mod(cm, dm, p).size() == 1) return true;
    }
    return false;
}

// squarefree part of a primitive integer polynomial
std::vector<BigInt> int_squarefree_part(const std::vector<BigInt>& c) {
    if (squarefree_mod_p(c)) return c;
    std::vector<BigInt> g = int_poly_gcd(c, int_derivative(c));
    if (g.size() <= 1) return c;
    // exact division c / g via rational polynomial division
    std::vector<Rational> cr(c.begin(), c.end()), gr(g.begin(), g.end());
    Poly q, r;
    Poly::divmod(Poly(std::move(cr)), Poly(std::move(gr)), q, r);
    if (!r.is_zero()) throw std::logic_error("int_squarefree_part: non-exact division");
    return primitive_integer_coeffs(q);
}

// divisor-enumeration route; returns nullopt when factoring/divisor caps hit
std::optional<std::vector<Rational>> roots_by_divisors(const std::vector<BigInt>& c) {
    constexpr uint64_t kRhoBudget = 300000;
    constexpr size_t kDivisorCap = 512;
    Factorization f0 = factor_integer(c.front(), kRhoBudget);
    if (!f0.complete) return std::nullopt;
    Factorization fn = factor_integer(c.back(), kRhoBudget);
    if (!fn.complete) return std::nullopt;
    std::vector<BigInt> us, vs;
    try {
        us = divisors(f0, kDivisorCap);
        vs = divisors(fn, kDivisorCap);
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
    if (us.size() * vs.size() > 4000) return std::nullopt;
    std::vector<Rational> out;
    for (const BigInt& u : us) {
        for (const BigInt& v : vs) {
            if (!BigInt::gcd(u, v).is_one()) continue;
            if (is_integer_root(c, u, v)) out.push_back(Rational(u, v));
            if (is_integer_root(c, -u, v)) out.push_back(Rational(-u, v));
        }
    }
    return out;
}

} // namespace

std::vector<Rational> rational_roots(std::vector<BigInt> c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<Rational> out;

    // strip x^k
    size_t zero_mult = 0;
    while (c.front().is_zero()) {
        c.erase(c.begin());
        ++zero_mult;
    }
    for (size_t i = 0; i < zero_mult; ++i) out.push_back(Rational(0));
    if (c.size() < 2) {
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Rational> distinct;
    if (c.size() == 2) {
        distinct.push_back(Rational(-c[0], c[1]));
    } else if (c.size() == 3) {
        BigInt disc = c[1] * c[1] - BigInt(4) * c[2] * c[0];
        if (disc.sign() >= 0 && disc.is_perfect_square()) {
            BigInt s = disc.isqrt();
            BigInt two_a = BigInt(2) * c[2];
            distinct.push_back(Rational(-c[1] + s, two_a));
            if (!s.is_zero()) distinct.push_back(Rational(-c[1] - s, two_a));
        }
    } else {
        // cheap conclusive rejection ladder: no roots mod p (p coprime to
        // the leading coefficient) means no rational roots at all
        bool rejected = false;
        for (uint64_t sp : {211ULL, 401ULL, 607ULL, 809ULL, 1009ULL, 2003ULL}) {
            if (c.back().mod_u64(sp) == 0) continue;
            std::vector<uint64_t> cm = reduce_mod(c, sp);
            bool any = false;
            for (uint64_t r = 0; r < sp && !any; ++r)
                if (eval_mod(cm, r, sp) == 0) any = true;
            if (!any) { rejected = true; break; }
        }
        if (!rejected) {
            std::vector<BigInt> sf = int_squarefree_part(c);
            // the divisor route only pays off for small edge coefficients;
            // everything else lifts
            BigInt bound = BigInt(10).pow(10);
            bool small_edges = sf.front().abs() < bound && sf.back().abs() < bound;
            std::optional<std::vector<Rational>> div_route;
            if (small_edges) div_route = roots_by_divisors(sf);
            distinct = div_route ? *div_route : roots_by_lifting(sf);
        }
    }

    // multiplicities via successive derivatives, all in integer arithmetic
    std::vector<std::vector<BigInt>> ders{c};
    for (const Rational& r : distinct) {
        out.push_back(r);
        size_t k = 1;
        while (true) {
            if (ders.size() <= k) ders.push_back(int_derivative(ders.back()));
            const auto& dk = ders[k];
            if (dk.empty() || !is_integer_root(dk, r.num(), r.den())) break;
            out.push_back(r);
            ++k;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    // clear denominators; content removal is unnecessary for root finding
    BigInt l(1);
    for (const Rational& c : p.coeffs()) l = BigInt::lcm(l, c.den());
    std::vector<BigInt> c;
    c.reserve(p.coeffs().size());
    for (const Rational& coef : p.coeffs()) c.push_back(coef.num() * (l / coef.den()));
    return rational_roots(std::move(c));
}

Poly QuarticFactorization::expand() const {
    Poly r(unit);
    for (const auto& [f, e] : factors)
        for (int i = 0; i < e; ++i) r = r * f;
    return r;
}

namespace {

void push_factor(QuarticFactorization& out, const Poly& monic_irred) {
    for (auto& [f, e] : out.factors) {
        if (f == monic_irred) { ++e; return; }
    }
    out.factors.push_back({monic_irred, 1});
}

} // namespace

QuarticFactorization factor_quartic(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("factor_quartic: zero polynomial");
    if (p.degree() > 4) throw std::domain_error("factor_quartic: degree > 4");
    QuarticFactorization out;
    out.unit = p.leading();
    Poly rem = p.monic();

    // linear factors first
    for (const Rational& r : rational_roots(rem)) {
        Poly lin(std::vector<Rational>{-r, Rational(1)});
        push_factor(out, lin);
        rem = rem / lin;
    }
    if (rem.degree() <= 0) return out;
    if (rem.degree() <= 3) {
        // no rational roots left: quadratics and cubics are irreducible
        push_factor(out, rem);
        return out;
    }

    // rootless quartic x^4 + a x^3 + b x^2 + c x + d: try two quadratics via
    // the resolvent cubic z^3 - b z^2 + (ac - 4d) z - (a^2 d - 4 b d + c^2),
    // whose rational roots are the possible values of z = b1 + b2
    Rational a = rem[3], b = rem[2], c = rem[1], d = rem[0];
    Poly resolvent(std::vector<Rational>{
        -(a * a * d - Rational(4) * b * d + c * c),
        a * c - Rational(4) * d,
        -b,
        Rational(1)});
    for (const Rational& z : rational_roots(resolvent)) {
        // a1 + a2 = a, a1 a2 = b - z, b1 + b2 = z, b1 b2 = d
        auto try_split = [&](const Rational& a1, const Rational& a2) -> bool {
            // b1 + b2 = z, b1 b2 = d, and a1 b2 + a2 b1 = c
            // solve the linear system unless a1 == a2
            Rational b1, b2;
            if (a1 != a2) {
                // b1 = (c - a1 z) / (a2 - a1), from a1(z - b1) + a2 b1 = c
                b1 = (c - a1 * z) / (a2 - a1);
                b2 = z - b1;
            } else {
                // symmetric case: need b1 b2 = d with b1 + b2 = z
                Rational disc = z * z - Rational(4) * d;
                auto s = rational_sqrt(disc);
                if (!s) return false;
                b1 = (z + *s) / Rational(2);
                b2 = (z - *s) / Rational(2);
            }
            if (b1 * b2 != d) return false;
            if (a1 * b2 + a2 * b1 != c) return false;
            Poly q1(std::vector<Rational>{b1, a1, Rational(1)});
            Poly q2(std::vector<Rational>{b2, a2, Rational(1)});
            if (q1 * q2 != rem) return false;
            push_factor(out, q1);
            push_factor(out, q2);
            return true;
        };
        Rational disc = a * a - Rational(4) * (b - z);
        auto s = rational_sqrt(disc);
        if (!s) continue;
        Rational a1 = (a + *s) / Rational(2), a2 = (a - *s) / Rational(2);
        if (try_split(a1, a2)) return out;
        if (try_split(a2, a1)) return out;
    }
    push_factor(out, rem); // irreducible quartic
    return out;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly(Rational(1));
    std::vector<BigInt> ca = primitive_integer_coeffs(a);
    std::vector<BigInt> cb = primitive_integer_coeffs(b);
    if (coprime_mod_p(ca, cb)) return Poly(Rational(1));
    std::vector<BigInt> g = int_poly_gcd(std::move(ca), std::move(cb));
    std::vector<Rational> gr(g.begin(), g.end());
    return Poly(std::move(gr)).monic();
}

std::optional<Poly> poly_square_root(const Poly& p) {
    if (p.is_zero()) return Poly();
    if (p.degree() % 2) return std::nullopt;
    size_t m = static_cast<size_t>(p.degree()) / 2;
    auto lc_root = rational_sqrt(p.leading());
    if (!lc_root) return std::nullopt;
    std::vector<Rational> q(m + 1);
    q[m] = *lc_root;
    Rational twol = Rational(2) * q[m];
    for (size_t j = m; j-- > 0;) {
        // coefficient of x^(m+j) in q^2 equals p[m+j]
        Rational acc;
        for (size_t i = j + 1; i < m; ++i) {
            size_t other = m + j - i;
            if (other <= m && other > j) acc += q[i] * q[other];
        }
        q[j] = (p[m + j] - acc) / twol;
    }
    Poly cand(std::move(q));
    if (cand * cand == p) return cand;
    return std::nullopt;
}

} // namespace gtype
