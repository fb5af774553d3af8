// Rational-specific polynomial machinery: exact squareness tests, rational
// root extraction, quartic factorization over Q, and polynomial square
// roots.  Root extraction uses the rational-root theorem on the primitive
// integer form; when factoring the edge coefficients is too expensive it
// falls back to mod-p root finding with Hensel lifting and rational
// reconstruction, which is exact and needs no factorization.

#ifndef GTYPE_ROOTS_HPP
#define GTYPE_ROOTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gtype/ratfunc.hpp"

namespace gtype {

bool is_square_rational(const Rational& q);
std::optional<Rational> rational_sqrt(const Rational& q);

bool is_cube_rational(const Rational& q);
std::optional<Rational> rational_cbrt(const Rational& q);

// k-th power test, k >= 1; negative values allowed for odd k
bool is_kth_power_rational(const Rational& q, unsigned k, Rational* root = nullptr);

// clears denominators and divides by content; empty input rejected
std::vector<BigInt> primitive_integer_coeffs(const Poly& p);

// all rational roots with multiplicity, sorted; zero polynomial rejected
std::vector<Rational> rational_roots(const Poly& p);
// entry point on integer coefficients (lowest degree first); the preferred
// route for equations assembled in integer arithmetic
std::vector<Rational> rational_roots(std::vector<BigInt> coeffs);

struct QuarticFactorization {
    Rational unit;                              // leading content
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, with multiplicity
    Poly expand() const;
    bool irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

// full factorization over Q for deg <= 4 (rational roots + the resolvent
// cubic / coefficient-matching test for quadratic*quadratic splits)
QuarticFactorization factor_quartic(const Poly& p);

// exact square root in Q[x] when it exists (leading coefficient recursion)
std::optional<Poly> poly_square_root(const Poly& p);

} // namespace gtype

#endif
