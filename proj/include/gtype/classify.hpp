// End-to-end torsion classifiers over the three fields of interest:
//
//   A4inf — the compositum of all generalized-A4-type number fields.
//     Away from j = 0, 1728 the torsion depends only on j, and equals the
//     unique poset-maximal label among the j-map families matching j(E);
//     the CM twist rules handle j = 0 and 1728.
//
//   QA4 — the compositum of all A4-extensions (no quadratic subfields).
//     Composed per-prime: the rational torsion, a 2-growth rule (trivial
//     rational 2-torsion plus square discriminant gives full 2-torsion,
//     order-4 points never appear), 3-/5-parts frozen at their rational
//     values, and 7-/9-/13-cycles exactly on membership in the generic
//     models (up to Q-isomorphism, not just j).
//
//   C3inf — the compositum of all cyclic cubic fields; classification
//     provably coincides with QA4.
//
// Every verdict carries a rule trace for audit.

#ifndef GTYPE_CLASSIFY_HPP
#define GTYPE_CLASSIFY_HPP

#include <optional>
#include <string>

#include "gtype/curves.hpp"
#include "gtype/families.hpp"
#include "gtype/torsion.hpp"

namespace gtype {

enum class Field { A4inf, QA4, C3inf };
std::string field_name(Field f);

struct TraceEntry {
    std::string rule;
    std::string cite;
    std::string verdict;
};

struct ClassificationReport {
    EllipticCurve curve;
    Field field = Field::A4inf;
    TorsionStructure torsion;
    std::vector<TorsionStructure> matched_families; // A4inf mode
    std::vector<TraceEntry> trace;
    bool conservative = false; // set when a CM case falls back to the rational part

    nlohmann::ordered_json to_json() const;
};

// the 26 structures possible over the big compositum, and the 20 possible
// over the A4 compositum
const std::vector<TorsionStructure>& allowed_a4inf();
const std::vector<TorsionStructure>& allowed_qa4();

// the four structures occurring for only finitely many Qbar-classes, with
// their cited class counts (stored data, not recomputed here)
std::optional<int> finite_occurrence_count(const TorsionStructure& t);

ClassificationReport classify_a4inf(const EllipticCurve& e);

// the j-only core of the big-compositum classifier; requires j not in
// {0, 1728}
struct JClassification {
    std::vector<TorsionStructure> matched;
    TorsionStructure torsion;
};
JClassification a4inf_from_j(const Rational& j);
ClassificationReport classify_qa4(const EllipticCurve& e);
ClassificationReport classify_c3inf(const EllipticCurve& e);

ClassificationReport classify(const EllipticCurve& e, Field f);

} // namespace gtype

#endif
