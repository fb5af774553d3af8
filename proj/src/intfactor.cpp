#include "gtype/intfactor.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtype {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic for n < 3.3e24 with these witnesses
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool is_probable_prime(const BigInt& n) {
    if (n.sign() <= 0) return false;
    if (n.fits_ll()) return is_prime_u64(static_cast<uint64_t>(n.to_ll()));
    if (n.even()) return false;
    BigInt nm1 = n - BigInt(1);
    BigInt d = nm1;
    int s = 0;
    while (d.even()) { d = d / BigInt(2); ++s; }
    static const long long witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                          41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
    for (long long a : witnesses) {
        BigInt x = BigInt::powmod(BigInt(a), d, n);
        if (x.is_one() || x == nm1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == nm1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Brent-cycle rho; returns a nontrivial factor or 0 on budget exhaustion
BigInt pollard_rho(const BigInt& n, uint64_t& budget) {
    if (n.even()) return BigInt(2);
    for (long long c = 1; budget > 0; ++c) {
        BigInt x(2), y(2), d(1);
        BigInt cc(c);
        uint64_t steps = 0;
        while (d.is_one() && budget > 0) {
            x = (x * x + cc) % n;
            y = (y * y + cc) % n;
            y = (y * y + cc) % n;
            BigInt diff = x - y;
            if (diff.is_zero()) break; // cycle without factor; retry with new c
            d = BigInt::gcd(diff, n);
            ++steps;
            --budget;
        }
        if (!d.is_one() && !d.is_zero() && d != n) return d;
        if (steps == 0) break;
    }
    return BigInt(0);
}

void factor_rec(const BigInt& n, Factorization& out, uint64_t& budget) {
    if (n.is_one()) return;
    if (is_probable_prime(n)) { out.factors[n] += 1; return; }
    BigInt d = pollard_rho(n, budget);
    if (d.is_zero()) {
        out.complete = false;
        out.unfactored = out.unfactored.is_zero() ? n : out.unfactored * n;
        return;
    }
    factor_rec(d, out, budget);
    factor_rec(n / d, out, budget);
}

} // namespace

Factorization factor_integer(const BigInt& n, uint64_t rho_budget) {
    if (n.is_zero()) throw std::domain_error("factor_integer: zero");
    Factorization f;
    BigInt m = n.abs();
    if (m.is_one()) return f;
    // trial division up to 1e6
    for (uint64_t p = 2; p <= 1000000 && p * p <= 0xffffffffffffULL; p = p == 2 ? 3 : p + 2) {
        if (m.fits_ll()) {
            // small enough to finish with 64-bit logic
            uint64_t v = static_cast<uint64_t>(m.to_ll());
            for (uint64_t q = p; q <= 1000000; q = q == 2 ? 3 : q + 2) {
                if (q * q > v) break;
                while (v % q == 0) { f.factors[BigInt(static_cast<long long>(q))] += 1; v /= q; }
            }
            m = BigInt(static_cast<long long>(v));
            break;
        }
        while (m.mod_u64(p) == 0) {
            f.factors[BigInt(static_cast<long long>(p))] += 1;
            m = m / BigInt(static_cast<long long>(p));
        }
    }
    if (!m.is_one()) factor_rec(m, f, rho_budget);
    return f;
}

std::vector<BigInt> divisors(const Factorization& f, size_t cap) {
    if (!f.complete) throw std::runtime_error("divisors: incomplete factorization");
    std::vector<BigInt> out{BigInt(1)};
    for (const auto& [p, e] : f.factors) {
        size_t base = out.size();
        if (base * (e + 1) > cap) throw std::runtime_error("divisors: cap exceeded");
        BigInt pk(1);
        std::vector<BigInt> next;
        next.reserve(base * (e + 1));
        for (unsigned k = 0; k <= e; ++k) {
            for (size_t i = 0; i < base; ++i) next.push_back(out[i] * pk);
            pk = pk * p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt squarefree_part(const BigInt& n) {
    if (n.is_zero()) throw std::domain_error("squarefree_part: zero");
    Factorization f = factor_integer(n);
    if (!f.complete) throw std::runtime_error("squarefree_part: factorization budget exceeded");
    BigInt r(n.sign() < 0 ? -1 : 1);
    for (const auto& [p, e] : f.factors)
        if (e % 2) r = r * p;
    return r;
}

uint64_t mult_order(uint64_t a, uint64_t m) {
    if (m < 2) throw std::domain_error("mult_order: modulus < 2");
    uint64_t x = a % m, acc = x, ord = 1;
    if (std::__gcd(x, m) != 1) throw std::domain_error("mult_order: arguments not coprime");
    while (acc != 1) {
        acc = mulmod_u64(acc, x, m);
        ++ord;
        if (ord > m) throw std::logic_error("mult_order: no order found");
    }
    return ord;
}

} // namespace gtype
