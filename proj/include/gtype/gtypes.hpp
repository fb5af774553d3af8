// Weak/strong/generalized type classifiers.
//
// The decision procedures implemented here:
//   - lambda-series tests: H is of weak D_{p,q}-type iff
//     lambda_q(lambda_p(H)) is trivial, and of strong type iff additionally
//     no invariant factor of H^ab is divisible by q;
//   - D_{p,q} = F_q(zeta_p) x| Z/pZ built concretely, as an affine
//     permutation action on the q^f field points (f the order of q mod p)
//     or, for the large scan, as (f+1)x(f+1) affine matrices mod q that are
//     never fully enumerated;
//   - universal groups of weak G-type with k marked generators, as the
//     subgroup of a product of copies of G indexed by kernel-reduced
//     homomorphisms from the free group;
//   - relation checking by exhaustive evaluation over all k-tuples;
//   - the cyclotomic test: (Z/nZ)^x of generalized A4-type iff n | 504.

#ifndef GTYPE_GTYPES_HPP
#define GTYPE_GTYPES_HPP

#include <cstdint>
#include <optional>

#include "gtype/freeword.hpp"
#include "gtype/groups.hpp"

namespace gtype {

// lambda_p with a primality check on p
FiniteGroup lambda_p(const FiniteGroup& g, uint64_t p);

bool is_weak_dpq_type(const FiniteGroup& h, uint64_t p, uint64_t q);
bool is_strong_dpq_type(const FiniteGroup& h, uint64_t p, uint64_t q);
// = weak D_{3,2} type
bool is_generalized_a4_type(const FiniteGroup& h);

struct DpqSpec {
    uint64_t p, q;
    uint64_t f;        // multiplicative order of q mod p
    uint64_t points;   // q^f
    uint64_t order;    // p * q^f
};

DpqSpec dpq_spec(uint64_t p, uint64_t q);

// explicit permutation realization on q^f points; requires q^f <= 1e4 and
// the closure cap to accommodate p * q^f
FiniteGroup build_dpq(uint64_t p, uint64_t q, size_t cap = kDefaultClosureCap);

// checks lambda_q(lambda_p(D_{p,q})) = {e} on the affine-matrix realization
// without enumerating D itself; valid for every pair with q^f <= 1e4.
// use_certificate = false forces the generic normal-closure route (used by
// tests to cross-validate the certificate path)
bool dpq_lambda_check(uint64_t p, uint64_t q, bool use_certificate = true);

// true iff w evaluates to the identity on every tuple of H^arity;
// tuple space capped at 1e7; optional first-failing-tuple witness
bool satisfies_relation(const FiniteGroup& h, const FreeWord& w,
                        bool parallel = false,
                        std::vector<Elem>* witness = nullptr);

// universal group of weak G-type with k distinguished generators, built on
// the product of kernel-reduced homomorphisms F_k -> G; generators of the
// result are the k marked tuples
FiniteGroup universal_group(const FiniteGroup& g, unsigned k,
                            size_t cap = kDefaultClosureCap);

// (Z/nZ)^x, n >= 2
FiniteGroup unit_group_mod_n(uint64_t n);

// Q(zeta_n) lies in the A4 compositum iff this holds; must equal (n | 504)
bool cyclotomic_in_gen_a4(uint64_t n);

// batch scan over 1..hi, optionally OpenMP-parallel; result[n-1] for n
std::vector<uint8_t> scan_cyclotomic(uint64_t hi, bool parallel);

enum class Trilean { no, yes, undecided };

// bounded search for "H is a quotient of a subdirect product of transitive
// subgroups of G" with product arity capped (default 3); reports undecided
// when a cap is reached without a witness
Trilean is_generalized_type(const FiniteGroup& h, const FiniteGroup& g_perm,
                            int max_arity = 3, size_t budget = 200000);

} // namespace gtype

#endif
