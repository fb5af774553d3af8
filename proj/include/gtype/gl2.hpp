// GL2(Z/nZ) searches under mod-n image constraints.
//
// The central computation is genA4_rational_torsion: the set of vectors
// v in (Z/nZ)^2 whose stabilizer-core quotient H / core_H(Stab_H(v)) is of
// generalized A4-type.  Galois-theoretically this is the module of mod-n
// points rational over the big compositum when H is the mod-n image.  The
// set is certified to be a subgroup and returned in (a, b) normal form.
//
// Subgroup enumeration is exhaustive for n in {3, 4}; for larger n the
// stated generator sets are verified maximal among their overgroups (every
// one-element extension fails the property), which is the honestly weaker
// claim — conjugacy-class uniqueness is not decided here.

#ifndef GTYPE_GL2_HPP
#define GTYPE_GL2_HPP

#include <optional>
#include <string>

#include "gtype/groups.hpp"
#include "gtype/torsion.hpp"

namespace gtype {

// [[a,b],[c,d]] as an element of the mod-n matrix carrier
Elem mat2(int64_t a, int64_t b, int64_t c, int64_t d, int64_t n);
// parses "[[a,b],[c,d]] mod n"
std::pair<Elem, int64_t> parse_mat2(const std::string& text);

int64_t mat_det(const Elem& m, int64_t n);
int64_t mat_trace(const Elem& m, int64_t n);

// the full group GL2(Z/nZ), 2 <= n <= 16, with a short generator list
FiniteGroup gl2_full(int64_t n);
uint64_t gl2_order(int64_t n);

struct ImageConstraints {
    bool surjective_det = false;
    bool has_trace0_detminus1 = false;
    // require genA4_rational_torsion(H, n) >= this structure in the poset
    std::optional<TorsionStructure> quotient_genA4_on_fixed_module;
};

bool check_constraints(const FiniteGroup& h, int64_t n, const ImageConstraints& c);

TorsionStructure genA4_rational_torsion(const FiniteGroup& h, int64_t n);

// exhaustive subgroup enumeration filtered by constraints, one
// representative per GL2-conjugacy class; n in {3, 4} only
std::vector<FiniteGroup> all_subgroups_with_constraints(int64_t n, const ImageConstraints& c);

// conjugacy-class count of all subgroups plus the orbit-stabilizer
// cross-check data (sum over classes of [G : N_G(S)] must equal the total
// subgroup count)
struct SubgroupCensus {
    size_t total_subgroups;
    size_t conjugacy_classes;
    size_t orbit_sum;
};
SubgroupCensus subgroup_census(int64_t n);

struct MaximalityReport {
    int64_t modulus;
    std::string property;
    uint64_t order = 0;
    bool satisfies = false;
    bool maximal_among_overgroups = false;
    bool contained_in_split_cartan = false;
    TorsionStructure rational_torsion;
    std::string obstruction; // set when the split-Cartan isogeny obstruction applies
    std::vector<Elem> generators;
    nlohmann::ordered_json to_json() const;
};

// properties: "genA4-full-torsion" (surjective det, trace-0/det-(-1)
// element, generalized A4-type), "genA4-3x9-torsion" (same determinant
// conditions, rational torsion containing (3,9))
MaximalityReport verify_maximal(int64_t n, const std::vector<Elem>& generators,
                                const std::string& property, bool parallel = false);

struct NonsplitCheck7 {
    uint64_t normalizer_order = 0;
    size_t qualifying_classes = 0;
    std::vector<uint64_t> class_orders;
    bool none_generalized_a4 = false;
};
// Searches GL2(F7) for subgroup classes with surjective determinant whose
// PGL2(F7)-image is S3 (the mod-7 images occurring for the exceptional
// j-value of the local-global isogeny analysis) and decides whether any is
// of generalized A4-type.  The search space reduces to the Cartan
// normalizer containing such groups; see the implementation note.
NonsplitCheck7 nonsplit_cartan_normalizer_check7();

// static two-primary lookup data (curve labels per possible 2-primary
// structure) and its covering relations; stored, never re-derived
struct RzbEntry {
    TorsionStructure torsion;
    std::vector<std::string> curves;
};
const std::vector<RzbEntry>& rzb_two_primary_table();
const std::vector<std::pair<std::string, std::string>>& rzb_cover_edges();
// the source text announces 8 groups but lists 9 including the trivial one
std::string rzb_count_note();

} // namespace gtype

#endif
