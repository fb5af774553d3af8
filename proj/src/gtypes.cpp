#include "gtype/gtypes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gtype/intfactor.hpp"

namespace gtype {

FiniteGroup lambda_p(const FiniteGroup& g, uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("lambda_p: p must be prime");
    return lambda_subgroup(g, p);
}

bool is_weak_dpq_type(const FiniteGroup& h, uint64_t p, uint64_t q) {
    if (!is_prime_u64(p) || !is_prime_u64(q) || p == q)
        throw std::invalid_argument("is_weak_dpq_type: p, q must be distinct primes");
    return lambda_subgroup(lambda_subgroup(h, p), q).is_trivial();
}

bool is_strong_dpq_type(const FiniteGroup& h, uint64_t p, uint64_t q) {
    if (!is_weak_dpq_type(h, p, q)) return false;
    for (uint64_t d : abelian_invariants(h))
        if (d % q == 0) return false;
    return true;
}

bool is_generalized_a4_type(const FiniteGroup& h) {
    // A4 = D_{3,2}, and weak and generalized type agree for A4 in S4
    return lambda_subgroup(lambda_subgroup(h, 3), 2).is_trivial();
}

// ---- finite field F_{q^f} as F_q[y]/(g) ----

namespace {

struct SmallField {
    int64_t q;
    size_t f;
    std::vector<int64_t> modpoly; // monic, degree f, coefficients of y^0..y^f

    using FElem = std::vector<int64_t>; // length f

    FElem zero() const { return FElem(f, 0); }
    FElem one() const {
        FElem e(f, 0);
        e[0] = 1;
        return e;
    }

    FElem mul(const FElem& a, const FElem& b) const {
        std::vector<int64_t> prod(2 * f - 1, 0);
        for (size_t i = 0; i < f; ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < f; ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
        }
        // reduce modulo the defining polynomial
        for (size_t d = 2 * f - 2; d + 1 > f; --d) {
            int64_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (size_t i = 0; i < f; ++i)
                prod[d - f + i] = ((prod[d - f + i] - c * modpoly[i]) % q + q) % q;
        }
        return FElem(prod.begin(), prod.begin() + f);
    }

    FElem pow(FElem base, uint64_t e) const {
        FElem r = one();
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

// polynomial arithmetic mod (g, q) on uint64 coefficient vectors
std::vector<int64_t> polymulmod(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                                const std::vector<int64_t>& g, int64_t q) {
    size_t f = g.size() - 1;
    std::vector<int64_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
    }
    for (size_t d = prod.size(); d-- > f;) {
        int64_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (size_t i = 0; i < f; ++i)
            prod[d - f + i] = ((prod[d - f + i] - c * g[i]) % q + q) % q;
    }
    prod.resize(f);
    return prod;
}

std::vector<int64_t> polypowmod_x(uint64_t e, const std::vector<int64_t>& g, int64_t q) {
    size_t f = g.size() - 1;
    std::vector<int64_t> r(f, 0), base(f, 0);
    r[0] = 1;
    if (f == 1) {
        // x reduces to the constant -g[0]
        base[0] = ((-g[0]) % q + q) % q;
    } else {
        base[1] = 1;
    }
    while (e) {
        if (e & 1) r = polymulmod(r, base, g, q);
        base = polymulmod(base, base, g, q);
        e >>= 1;
    }
    return r;
}

std::vector<int64_t> poly_gcd_modq(std::vector<int64_t> a, std::vector<int64_t> b, int64_t q) {
    auto trim = [](std::vector<int64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto invq = [q](int64_t x) {
        int64_t t = 0, nt = 1, r = q, nr = ((x % q) + q) % q;
        while (nr) {
            int64_t d = r / nr;
            std::swap(t -= d * nt, nt);
            std::swap(r -= d * nr, nr);
        }
        return ((t % q) + q) % q;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        int64_t inv = invq(b.back());
        while (a.size() >= b.size()) {
            int64_t fcoef = (a.back() * inv) % q;
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[off + i] = ((a[off + i] - fcoef * b[i]) % q + q) % q;
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible_modq(const std::vector<int64_t>& g, int64_t q) {
    size_t f = g.size() - 1;
    if (f == 1) return true;
    // x^(q^f) == x mod g
    uint64_t qe = 1;
    for (size_t i = 0; i < f; ++i) qe *= static_cast<uint64_t>(q);
    std::vector<int64_t> xq = polypowmod_x(qe, g, q);
    std::vector<int64_t> x(f, 0);
    x[1 % f] = 1;
    if (xq != x) return false;
    // gcd(x^(q^(f/l)) - x, g) must be 1 for prime divisors l of f
    for (size_t l = 2; l <= f; ++l) {
        if (f % l || !is_prime_u64(l)) continue;
        uint64_t qe2 = 1;
        for (size_t i = 0; i < f / l; ++i) qe2 *= static_cast<uint64_t>(q);
        std::vector<int64_t> diff = polypowmod_x(qe2, g, q);
        diff[1] = ((diff[1] - 1) % q + q) % q;
        std::vector<int64_t> gcd = poly_gcd_modq(diff, g, q);
        if (gcd.size() != 1) return false;
    }
    return true;
}

// first monic irreducible of degree f over F_q, in lexicographic order of
// the low coefficients
std::vector<int64_t> first_irreducible(int64_t q, size_t f) {
    std::vector<int64_t> g(f + 1, 0);
    g[f] = 1;
    while (true) {
        if (g[0] != 0 && is_irreducible_modq(g, q)) return g;
        size_t i = 0;
        while (i < f) {
            if (++g[i] < q) break;
            g[i] = 0;
            ++i;
        }
        if (i == f) throw std::logic_error("first_irreducible: exhausted");
    }
}

struct DpqData {
    DpqSpec spec;
    SmallField field;
    std::vector<std::vector<int64_t>> zeta_matrix; // f x f action of zeta
};

DpqData dpq_data(uint64_t p, uint64_t q) {
    if (!is_prime_u64(p) || !is_prime_u64(q) || p == q)
        throw std::invalid_argument("build_dpq: p, q must be distinct primes");
    uint64_t f = mult_order(q % p, p);
    uint64_t points = 1;
    for (uint64_t i = 0; i < f; ++i) {
        points *= q;
        if (points > 10000) throw std::invalid_argument("build_dpq: q^f exceeds 1e4");
    }
    DpqData d;
    d.spec = DpqSpec{p, q, f, points, p * points};
    d.field.q = static_cast<int64_t>(q);
    d.field.f = f;
    d.field.modpoly = first_irreducible(static_cast<int64_t>(q), f);

    // find zeta of multiplicative order p: first alpha with alpha^((q^f-1)/p) != 1
    uint64_t cofactor = (points - 1) / p;
    SmallField::FElem zeta;
    for (uint64_t idx = 1; idx < points; ++idx) {
        SmallField::FElem alpha(f, 0);
        uint64_t v = idx;
        for (uint64_t i = 0; i < f; ++i) { alpha[i] = static_cast<int64_t>(v % q); v /= q; }
        SmallField::FElem cand = d.field.pow(alpha, cofactor);
        if (cand != d.field.one()) { zeta = cand; break; }
    }
    if (zeta.empty()) throw std::logic_error("build_dpq: no element of order p found");

    // matrix of multiplication by zeta in the basis 1, y, ..., y^(f-1)
    d.zeta_matrix.assign(f, std::vector<int64_t>(f, 0));
    for (uint64_t j = 0; j < f; ++j) {
        SmallField::FElem basis(f, 0);
        basis[j] = 1;
        SmallField::FElem img = d.field.mul(zeta, basis);
        for (uint64_t i = 0; i < f; ++i) d.zeta_matrix[i][j] = img[i];
    }
    return d;
}

} // namespace

DpqSpec dpq_spec(uint64_t p, uint64_t q) { return dpq_data(p, q).spec; }

FiniteGroup build_dpq(uint64_t p, uint64_t q, size_t cap) {
    DpqData d = dpq_data(p, q);
    uint64_t points = d.spec.points, f = d.spec.f;
    if (d.spec.order > cap) throw GroupSizeError("build_dpq: order exceeds closure cap");
    if (d.spec.order * points > 50000000ULL)
        throw GroupSizeError("build_dpq: explicit permutation realization too large");

    auto carrier = std::make_shared<PermCarrier>(points);
    auto index_of = [&](const std::vector<int64_t>& v) {
        uint64_t idx = 0, mul = 1;
        for (uint64_t i = 0; i < f; ++i) { idx += static_cast<uint64_t>(v[i]) * mul; mul *= q; }
        return idx;
    };
    auto vec_of = [&](uint64_t idx) {
        std::vector<int64_t> v(f);
        for (uint64_t i = 0; i < f; ++i) { v[i] = static_cast<int64_t>(idx % q); idx /= q; }
        return v;
    };

    Elem translate(points), multiply(points);
    for (uint64_t idx = 0; idx < points; ++idx) {
        std::vector<int64_t> v = vec_of(idx);
        std::vector<int64_t> t = v;
        t[0] = (t[0] + 1) % static_cast<int64_t>(q);
        translate[idx] = static_cast<int32_t>(index_of(t));
        std::vector<int64_t> m(f, 0);
        for (uint64_t i = 0; i < f; ++i)
            for (uint64_t j = 0; j < f; ++j)
                m[i] = (m[i] + d.zeta_matrix[i][j] * v[j]) % static_cast<int64_t>(q);
        multiply[idx] = static_cast<int32_t>(index_of(m));
    }
    FiniteGroup g = closure(carrier, {translate, multiply}, cap);
    if (g.order() != d.spec.order) throw std::logic_error("build_dpq: unexpected order");
    return g;
}

bool dpq_lambda_check(uint64_t p, uint64_t q, bool use_certificate) {
    DpqData d = dpq_data(p, q);
    uint64_t f = d.spec.f;
    auto carrier = std::make_shared<AffineCarrier>(static_cast<int64_t>(q), f);
    size_t w = f + 1;

    Elem translate(w * w, 0), multiply(w * w, 0);
    for (size_t i = 0; i < w; ++i) { translate[i * w + i] = 1; }
    translate[0 * w + (w - 1)] = 1; // shift by e_0
    for (size_t i = 0; i < f; ++i)
        for (size_t j = 0; j < f; ++j)
            multiply[i * w + j] = static_cast<int32_t>(d.zeta_matrix[i][j]);
    multiply[(w - 1) * w + (w - 1)] = 1;

    std::vector<Elem> dgens{translate, multiply};

    // generating seed for lambda_p(D): generator commutators and p-th powers
    auto comm = [&](const Elem& a, const Elem& b) {
        return carrier->compose(carrier->compose(carrier->inverse(a), carrier->inverse(b)),
                                carrier->compose(a, b));
    };
    auto elem_pow = [&](const Elem& a, uint64_t e) {
        Elem r = carrier->identity(), base = a;
        while (e) {
            if (e & 1) r = carrier->compose(r, base);
            base = carrier->compose(base, base);
            e >>= 1;
        }
        return r;
    };
    std::vector<Elem> ngens{comm(translate, multiply), comm(multiply, translate),
                            elem_pow(translate, p), elem_pow(multiply, p)};

    // certificate fast path: if every seed element of lambda_p(D) is a pure
    // translation and the multiplier has exact order p, the whole normal
    // closure stays inside the translation subgroup (conjugation maps
    // translations to translations), which is elementary abelian of
    // exponent q; its lambda_q is then trivial.
    auto is_translation = [&](const Elem& m) {
        for (size_t i = 0; i < f; ++i)
            for (size_t j = 0; j < f; ++j)
                if (m[i * w + j] != (i == j ? 1 : 0)) return false;
        for (size_t j = 0; j < f; ++j)
            if (m[(w - 1) * w + j] != 0) return false;
        return m[(w - 1) * w + (w - 1)] == 1;
    };
    bool certified = use_certificate && elem_pow(multiply, p) == carrier->identity();
    for (size_t i = 0; i < 3 && certified; ++i) certified = is_translation(ngens[i]);
    if (certified) return true;

    // generic route: normal closure inside D without enumerating D (the
    // closure cap bounds the size of lambda_p(D) itself, at most q^f here)
    FiniteGroup n = closure(carrier, ngens, 4 * d.spec.points + 16);
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t gi = 0; gi < ngens.size() && !grew; ++gi) {
            for (const Elem& t : dgens) {
                Elem c = carrier->compose(carrier->compose(t, ngens[gi]), carrier->inverse(t));
                if (!n.contains(c)) {
                    ngens.push_back(std::move(c));
                    n = closure(carrier, ngens, 4 * d.spec.points + 16);
                    grew = true;
                    break;
                }
            }
        }
    }

    // lambda_q(N) is trivial iff N is abelian of exponent dividing q
    for (size_t i = 0; i < ngens.size(); ++i)
        for (size_t j = i + 1; j < ngens.size(); ++j)
            if (carrier->compose(ngens[i], ngens[j]) != carrier->compose(ngens[j], ngens[i]))
                return false;
    for (const Elem& e : n.elements)
        if (elem_pow(e, q) != carrier->identity()) return false;
    return true;
}

bool satisfies_relation(const FiniteGroup& h, const FreeWord& w, bool parallel,
                        std::vector<Elem>* witness) {
    int k = w.arity();
    if (k == 0) return true;
    double space = 1;
    for (int i = 0; i < k; ++i) space *= static_cast<double>(h.order());
    if (space > 1e7) throw GroupSizeError("satisfies_relation: tuple space exceeds 1e7");
    uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= h.order();

    const Elem id = h.carrier->identity();
    const uint64_t n = h.order();
    auto tuple_at = [&](uint64_t idx) {
        std::vector<Elem> tup(k);
        for (int i = 0; i < k; ++i) {
            tup[i] = h.elements[idx % n];
            idx /= n;
        }
        return tup;
    };

    // chunk over the most significant tuple digit; each chunk reuses its
    // tuple buffer and exits early on a failure
    const uint64_t inner = total / n;
    uint64_t first_bad = total;
#ifdef _OPENMP
#pragma omp parallel for reduction(min : first_bad) schedule(dynamic, 1) if (parallel)
#endif
    for (int64_t hi = 0; hi < static_cast<int64_t>(n); ++hi) {
        uint64_t base = static_cast<uint64_t>(hi) * inner;
        if (base >= first_bad) continue;
        std::vector<Elem> tup(k);
        tup[k - 1] = h.elements[static_cast<size_t>(hi)];
        for (uint64_t rest = 0; rest < inner; ++rest) {
            uint64_t v = rest;
            for (int i = 0; i + 1 < k; ++i) {
                tup[i] = h.elements[v % n];
                v /= n;
            }
            if (w.eval(*h.carrier, tup) != id) {
                first_bad = std::min(first_bad, base + rest);
                break;
            }
        }
    }
    (void)parallel;

    if (first_bad == total) return true;
    if (witness) *witness = tuple_at(first_bad);
    return false;
}

FiniteGroup universal_group(const FiniteGroup& g, unsigned k, size_t cap) {
    if (k == 0) throw std::invalid_argument("universal_group: k = 0");
    double space = 1;
    for (unsigned i = 0; i < k; ++i) space *= static_cast<double>(g.order());
    if (space > 1e6) throw GroupSizeError("universal_group: too many homomorphisms");

    // every k-tuple of elements is a homomorphism from the free group
    size_t n = g.order();
    uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= n;
    std::vector<std::vector<Elem>> homs;
    homs.reserve(total);
    for (uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Elem> tup(k);
        uint64_t v = idx;
        for (unsigned i = 0; i < k; ++i) {
            tup[i] = g.elements[v % n];
            v /= n;
        }
        homs.push_back(std::move(tup));
    }

    // image sizes, for the kernel-containment test
    std::vector<size_t> img_size(homs.size());
    for (size_t i = 0; i < homs.size(); ++i) img_size[i] = closure(g.carrier, homs[i]).order();

    // ker(a) subset ker(b)  <=>  the pair subgroup <(a_i, b_i)> has order |im(a)|
    auto pc = std::make_shared<ProductCarrier>(std::vector<CarrierPtr>{g.carrier, g.carrier});
    auto kernel_leq = [&](size_t a, size_t b) {
        std::vector<Elem> pairs(k);
        for (unsigned i = 0; i < k; ++i) pairs[i] = pc->embed({homs[a][i], homs[b][i]});
        return closure(pc, pairs).order() == img_size[a];
    };

    // keep the lexicographically first hom of each kernel class, and drop any
    // hom whose kernel strictly contains another's
    std::vector<size_t> kept;
    for (size_t i = 0; i < homs.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < homs.size() && !redundant; ++j) {
            if (i == j) continue;
            bool ji = kernel_leq(j, i);
            bool ij = kernel_leq(i, j);
            if (ji && !ij) redundant = true;              // ker(j) strictly below
            if (ji && ij && j < i) redundant = true;      // same kernel, earlier rep
        }
        if (!redundant) kept.push_back(i);
    }
    if (kept.empty()) throw std::logic_error("universal_group: no homomorphisms kept");

    std::vector<CarrierPtr> parts(kept.size(), g.carrier);
    auto prod = std::make_shared<ProductCarrier>(parts);
    std::vector<Elem> gens(k);
    for (unsigned i = 0; i < k; ++i) {
        std::vector<Elem> comps;
        comps.reserve(kept.size());
        for (size_t idx : kept) comps.push_back(homs[idx][i]);
        gens[i] = prod->embed(comps);
    }
    return closure(prod, gens, cap);
}

FiniteGroup unit_group_mod_n(uint64_t n) {
    if (n < 2) throw std::invalid_argument("unit_group_mod_n: n < 2");
    auto carrier = std::make_shared<UnitsCarrier>(static_cast<int64_t>(n));
    std::vector<Elem> units;
    for (uint64_t a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) units.push_back(Elem{static_cast<int32_t>(a)});
    // small generating set, greedily
    std::vector<Elem> gens;
    FiniteGroup cur = closure(carrier, {});
    for (const Elem& u : units) {
        if (cur.contains(u)) continue;
        gens.push_back(u);
        cur = closure(carrier, gens);
        if (cur.order() == units.size()) break;
    }
    return cur;
}

bool cyclotomic_in_gen_a4(uint64_t n) {
    if (n <= 2) return true; // Q(zeta_1) = Q(zeta_2) = Q
    return is_generalized_a4_type(unit_group_mod_n(n));
}

std::vector<uint8_t> scan_cyclotomic(uint64_t hi, bool parallel) {
    std::vector<uint8_t> out(hi, 0);
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int64_t n = 1; n <= static_cast<int64_t>(hi); ++n)
            out[n - 1] = cyclotomic_in_gen_a4(static_cast<uint64_t>(n)) ? 1 : 0;
        return out;
    }
#else
    (void)parallel;
#endif
    for (uint64_t n = 1; n <= hi; ++n) out[n - 1] = cyclotomic_in_gen_a4(n) ? 1 : 0;
    return out;
}

Trilean is_generalized_type(const FiniteGroup& h, const FiniteGroup& g_perm,
                            int max_arity, size_t budget) {
    auto perm = std::dynamic_pointer_cast<const PermCarrier>(g_perm.carrier);
    if (!perm) throw std::invalid_argument("is_generalized_type: G must be a permutation group");

    // transitive subgroups of G
    std::vector<FiniteGroup> transitive;
    for (const auto& elems : all_subgroups(g_perm)) {
        FiniteGroup s = subgroup_from_elements(g_perm, elems);
        // orbit of point 0
        std::set<int32_t> orbit;
        for (const Elem& e : s.elements) orbit.insert(e[0]);
        if (orbit.size() == perm->degree()) transitive.push_back(std::move(s));
    }

    bool capped = false;
    size_t work = 0;
    std::vector<std::vector<size_t>> tuples;
    for (int arity = 1; arity <= max_arity; ++arity) {
        // multisets of transitive subgroup indices
        std::vector<size_t> idx(arity, 0);
        while (true) {
            tuples.push_back(idx);
            int pos = arity - 1;
            while (pos >= 0 && idx[pos] + 1 == transitive.size()) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < arity; ++i) idx[i] = idx[pos];
        }
    }

    for (const auto& tup : tuples) {
        FiniteGroup prod = transitive[tup[0]];
        std::vector<FiniteGroup> factors{transitive[tup[0]]};
        for (size_t i = 1; i < tup.size(); ++i) {
            prod = direct_product(prod, transitive[tup[i]]);
            factors.push_back(transitive[tup[i]]);
        }
        if (prod.order() % h.order() != 0) continue;
        std::vector<std::vector<Elem>> subs;
        try {
            subs = all_subgroups(prod, budget / 10 + 16);
        } catch (const GroupSizeError&) {
            capped = true;
            continue;
        }
        for (const auto& elems : subs) {
            if (++work > budget) { capped = true; break; }
            if (elems.size() % h.order() != 0) continue;
            FiniteGroup s = subgroup_from_elements(prod, elems);
            // subdirect: all projections surjective
            bool subdirect;
            if (tup.size() == 1) {
                subdirect = s.order() == prod.order();
            } else {
                try {
                    subdirect = is_subdirect_product(s, factors);
                } catch (const std::invalid_argument&) {
                    subdirect = false;
                }
            }
            if (!subdirect) continue;
            // quotients of S isomorphic to H
            for (const auto& nelems : all_subgroups(s)) {
                if (nelems.size() * h.order() != s.order()) continue;
                FiniteGroup nn = subgroup_from_elements(s, nelems);
                if (!is_normal(s, nn)) continue;
                if (isomorphic(quotient(s, nn), h)) return Trilean::yes;
            }
        }
        if (capped) break;
    }
    return capped ? Trilean::undecided : Trilean::no;
}

} // namespace gtype
