// The parameterization database: the twenty-six j-maps / sporadic j-sets
// (one per possible torsion structure over the big compositum), the
// isogeny-family models with their discriminant-square kernels, the CM
// twist rules at j = 0 and j = 1728, and the generic models for cyclic
// torsion over the compositum of A4 extensions.
//
// Maps are stored exactly as tabulated, including the two rows given
// through a substitution u(t); those compose on demand.  Family-model
// discriminant identities (disc(E_t) * k(t) a square in Q(t)) are verified
// once at database construction.

#ifndef GTYPE_FAMILIES_HPP
#define GTYPE_FAMILIES_HPP

#include <optional>
#include <string>

#include "gtype/curves.hpp"
#include "gtype/torsion.hpp"

namespace gtype {

struct JFamilyEntry {
    RationalFunction outer;
    std::optional<RationalFunction> substitution; // u(t), composed as outer(u(t))
    // jointly scaled integer coefficient forms, precomputed so fiber
    // equations assemble in integer arithmetic
    std::vector<BigInt> outer_num_z, outer_den_z;
    std::vector<BigInt> sub_num_z, sub_den_z;
};

struct JFamily {
    TorsionStructure label;
    std::vector<JFamilyEntry> maps; // empty for finite-j-set rows
    std::vector<Rational> jset;     // empty for rational-map rows
    bool sporadic() const { return maps.empty(); }
};

const std::vector<JFamily>& jfamily_table();
const JFamily& jfamily(const TorsionStructure& t);

// evaluates the first stored map (applying the substitution when present)
Rational jmap_eval(const TorsionStructure& t, const Rational& tval);

struct FiberResult {
    bool sporadic = false;
    bool member = false;
    std::vector<Rational> params; // rational preimages, map families only
};
FiberResult jmap_fibers(const TorsionStructure& t, const Rational& j0);
bool family_matches(const TorsionStructure& t, const Rational& j0);

// parameterized Weierstrass models whose discriminant is a square exactly
// on the stated kernel
struct FamilyModel {
    std::string label;
    WeierstrassCurve<RationalFunction> model;
    Poly kernel; // k(t): disc(E_t) k(t) is a square in Q(t)
};

const std::vector<FamilyModel>& family_models(); // 13-isogeny, 7-isogeny, 5-torsion, 3-isogeny
const FamilyModel& family_model(const std::string& label);
Poly disc_square_kernel(const FamilyModel& m);
// disc(E_t) * k(t) is a perfect square in Q(t)
bool verify_disc_square_identity(const FamilyModel& m);

RationalFunction model_disc(const WeierstrassCurve<RationalFunction>& m);
RationalFunction model_j(const WeierstrassCurve<RationalFunction>& m);
EllipticCurve specialize(const WeierstrassCurve<RationalFunction>& m, const Rational& t);

// sextic-twist rule at j = 0 (E_s : y^2 = x^3 + s)
TorsionStructure cm_rule_j0(const Rational& s);
// quartic-twist rule at j = 1728 (E_s : y^2 = x^3 + s x)
TorsionStructure cm_rule_j1728(const Rational& s);

// generic model with a cyclic subgroup of order N rational over the
// compositum of A4-extensions; N in {3, 5, 7, 9, 13}
const WeierstrassCurve<RationalFunction>& strong_model(int n);
// the two worked examples: full 2-torsion with a 14-cycle, and the 18-cycle
const WeierstrassCurve<RationalFunction>& strong_2x14_model();
const WeierstrassCurve<RationalFunction>& strong_18_model();

// cubic whose splitting field carries the order-18 point of the 18-model
Poly strong_18_resolvent(const Rational& t);
enum class CubicCondition { cyclic, conditional };
// "cyclic" when the resolvent is irreducible with square discriminant;
// degenerate parameters report "conditional"
CubicCondition strong_18_condition(const Rational& t);

// class-number-one reference j-invariants (external data), and the
// torsion over the big compositum for the CM classes with j != 0, 1728
const std::vector<std::pair<long long, Rational>>& cm_j_list(); // (discriminant, j)
const std::vector<std::pair<Rational, TorsionStructure>>& cm_torsion_table();

// bit-exact JSON export of the whole database
nlohmann::ordered_json families_catalog_json();

} // namespace gtype

#endif
