// Integer factorization: trial division up to 10^6, then Miller-Rabin +
// Pollard rho (Brent variant).  Factoring is budgeted; callers that can
// work without a complete factorization must handle `complete == false`.

#ifndef GTYPE_INTFACTOR_HPP
#define GTYPE_INTFACTOR_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gtype/bigint.hpp"

namespace gtype {

bool is_probable_prime(const BigInt& n);

struct Factorization {
    std::map<BigInt, unsigned> factors; // prime -> exponent
    bool complete = true;               // false if the rho budget ran out
    BigInt unfactored;                  // composite cofactor when incomplete
};

// n != 0; factors |n|
Factorization factor_integer(const BigInt& n, uint64_t rho_budget = 2'000'000);

// all positive divisors of |n| in increasing order; requires a complete
// factorization and caps the divisor count
std::vector<BigInt> divisors(const Factorization& f, size_t cap);

// squarefree part of n (n != 0), sign preserved; requires complete factorization
BigInt squarefree_part(const BigInt& n);

// multiplicative order of a mod m (gcd(a, m) = 1), small arguments
uint64_t mult_order(uint64_t a, uint64_t m);

bool is_prime_u64(uint64_t n);

} // namespace gtype

#endif
