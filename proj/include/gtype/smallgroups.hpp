// Internal corpus of small groups used by the test and verification
// batteries: every group of order <= 16, the standard permutation groups
// through S4, and direct products up to order 24.  Everything is built
// concretely (permutations, matrices, affine maps, or normal-form
// multiplication tables); nothing is ingested from outside.

#ifndef GTYPE_SMALLGROUPS_HPP
#define GTYPE_SMALLGROUPS_HPP

#include <string>
#include <vector>

#include "gtype/groups.hpp"

namespace gtype {

FiniteGroup trivial_group();
FiniteGroup cyclic_group(size_t n);                    // permutation n-cycle
FiniteGroup dihedral_group(size_t n);                  // order 2n, n >= 3
FiniteGroup symmetric_group(size_t n);                 // n <= 5
FiniteGroup alternating_group(size_t n);               // n <= 5
FiniteGroup quaternion_group();                        // Q8 as matrices mod 3
FiniteGroup dicyclic_group(size_t n);                  // order 4n (Q8 = n=2, Q16 = n=4)
// <x -> x+1, x -> ux> inside Sym(Z/m); order m * ord_m(u)
FiniteGroup affine_group(int64_t m, int64_t u);
FiniteGroup sl2_f3();

struct NamedGroup {
    std::string name;
    FiniteGroup group;
};

// all groups of order <= 16 (42 of them), one per isomorphism class
std::vector<NamedGroup> groups_up_to_16();

// groups_up_to_16 plus S4, SL2(F3) and direct products up to order 24
std::vector<NamedGroup> small_group_corpus();

} // namespace gtype

#endif
