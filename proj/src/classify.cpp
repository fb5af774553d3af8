#include "gtype/classify.hpp"

#include <algorithm>
#include <optional>

namespace gtype {

std::string field_name(Field f) {
    switch (f) {
        case Field::A4inf: return "A4inf";
        case Field::QA4: return "QA4";
        case Field::C3inf: return "C3inf";
    }
    return "?";
}

nlohmann::ordered_json ClassificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["curve"] = curve_to_json(curve);
    j["field"] = field_name(field);
    j["torsion"] = torsion.to_json();
    auto fams = nlohmann::ordered_json::array();
    for (const TorsionStructure& t : matched_families) fams.push_back(t.to_json());
    j["families"] = fams;
    auto tr = nlohmann::ordered_json::array();
    for (const TraceEntry& e : trace) {
        nlohmann::ordered_json je;
        je["rule"] = e.rule;
        je["cite"] = e.cite;
        je["verdict"] = e.verdict;
        tr.push_back(je);
    }
    j["trace"] = tr;
    if (conservative) j["conservative"] = true;
    return j;
}

const std::vector<TorsionStructure>& allowed_a4inf() {
    static const std::vector<TorsionStructure> list = [] {
        std::vector<TorsionStructure> v;
        for (uint64_t m : {1, 3, 5, 7, 9, 13, 15, 21}) v.push_back(TorsionStructure(1, m));
        for (uint64_t m = 1; m <= 9; ++m) v.push_back(TorsionStructure(2, 2 * m));
        for (uint64_t m : {1, 3}) v.push_back(TorsionStructure(3, 3 * m));
        for (uint64_t m : {1, 2, 3, 4, 7}) v.push_back(TorsionStructure(4, 4 * m));
        v.push_back(TorsionStructure(6, 6));
        v.push_back(TorsionStructure(8, 8));
        return v;
    }();
    return list;
}

const std::vector<TorsionStructure>& allowed_qa4() {
    static const std::vector<TorsionStructure> list = [] {
        std::vector<TorsionStructure> v;
        for (uint64_t m = 1; m <= 10; ++m) v.push_back(TorsionStructure(1, m));
        for (uint64_t m : {12, 13, 14, 18, 21}) v.push_back(TorsionStructure(1, m));
        for (uint64_t m : {1, 2, 3, 4, 7}) v.push_back(TorsionStructure(2, 2 * m));
        return v;
    }();
    return list;
}

std::optional<int> finite_occurrence_count(const TorsionStructure& t) {
    // cited class counts for the structures realized only finitely often
    static const std::vector<std::pair<TorsionStructure, int>> counts = {
        {TorsionStructure(1, 21), 4},
        {TorsionStructure(1, 15), 2},
        {TorsionStructure(2, 14), 2},
        {TorsionStructure(3, 9), 1},
    };
    for (const auto& [s, c] : counts)
        if (s == t) return c;
    return std::nullopt;
}

namespace {

bool in_list(const TorsionStructure& t, const std::vector<TorsionStructure>& list) {
    return std::find(list.begin(), list.end(), t) != list.end();
}

// membership of E, up to Q-isomorphism, in the generic order-N model family
bool strong_member(int n, const EllipticCurve& e, const Rational& j, Rational* param) {
    struct ZMap {
        std::vector<BigInt> num, den;
    };
    static const std::map<int, ZMap> jmaps = [] {
        std::map<int, ZMap> m;
        for (int k : {7, 9, 13}) {
            RationalFunction f = model_j(strong_model(k));
            BigInt l(1);
            for (const Rational& c : f.num().coeffs()) l = BigInt::lcm(l, c.den());
            for (const Rational& c : f.den().coeffs()) l = BigInt::lcm(l, c.den());
            ZMap z;
            for (const Rational& c : f.num().coeffs()) z.num.push_back(c.num() * (l / c.den()));
            for (const Rational& c : f.den().coeffs()) z.den.push_back(c.num() * (l / c.den()));
            m.emplace(k, std::move(z));
        }
        return m;
    }();
    const ZMap& jm = jmaps.at(n);
    std::vector<BigInt> eq(std::max(jm.num.size(), jm.den.size()), BigInt(0));
    for (size_t i = 0; i < jm.num.size(); ++i) eq[i] = j.den() * jm.num[i];
    for (size_t i = 0; i < jm.den.size(); ++i) eq[i] = eq[i] - j.num() * jm.den[i];
    bool zero = true;
    for (const BigInt& c : eq) zero = zero && c.is_zero();
    if (zero) return false;
    for (const Rational& t : rational_roots(std::move(eq))) {
        EllipticCurve cand;
        try {
            cand = specialize(strong_model(n), t);
        } catch (const std::exception&) {
            continue; // pole or singular specialization
        }
        if (q_isomorphic(cand, e)) {
            if (param) *param = t;
            return true;
        }
    }
    return false;
}

} // namespace

JClassification a4inf_from_j(const Rational& j) {
    if (j == Rational(0) || j == Rational(1728))
        throw std::invalid_argument("a4inf_from_j: twist parameter needed at j = 0, 1728");
    JClassification out;
    for (const JFamily& f : jfamily_table())
        if (family_matches(f.label, j)) out.matched.push_back(f.label);
    std::vector<TorsionStructure> maximal;
    for (const TorsionStructure& t : out.matched) {
        bool dominated = false;
        for (const TorsionStructure& u : out.matched)
            if (u != t && poset_leq(t, u)) dominated = true;
        if (!dominated) maximal.push_back(t);
    }
    if (maximal.size() != 1)
        throw std::logic_error("a4inf_from_j: matched families lack a unique maximal element");
    out.torsion = maximal.front();
    return out;
}

ClassificationReport classify_a4inf(const EllipticCurve& e) {
    ClassificationReport rep;
    rep.curve = e;
    rep.field = Field::A4inf;
    FullInvariants v = invariants(e);
    Rational j = v.j;

    if (j == Rational(0)) {
        // sextic-twist parameter: E is Q-isomorphic to y^2 = x^3 + s, s = -c6/864
        Rational s = -v.c6 / Rational(864);
        rep.torsion = cm_rule_j0(s);
        rep.trace.push_back({"cm-sextic-twist", "case analysis of the 3-division polynomial 3x(x^3+4s)",
                             rep.torsion.str()});
    } else if (j == Rational(1728)) {
        Rational s = -v.c4 / Rational(48);
        rep.torsion = cm_rule_j1728(s);
        rep.trace.push_back({"cm-quartic-twist", "full 4-torsion exactly when +-s is a square",
                             rep.torsion.str()});
    } else {
        rep.trace.push_back({"j-reduction", "torsion over the compositum depends only on j away from 0, 1728",
                             j.str()});
        JClassification jc = a4inf_from_j(j);
        rep.matched_families = std::move(jc.matched);
        rep.torsion = jc.torsion;
        for (const TorsionStructure& t : rep.matched_families)
            rep.trace.push_back({"family-match", "parameterization table row", t.str()});
        rep.trace.push_back({"unique-maximal", "the matched set has a unique maximal element", rep.torsion.str()});
    }

    if (auto count = finite_occurrence_count(rep.torsion)) {
        rep.trace.push_back({"finite-occurrence", "cited class count for this structure (stored data)",
                             std::to_string(*count) + " classes"});
    }
    if (!in_list(rep.torsion, allowed_a4inf()))
        throw std::logic_error("classify_a4inf: result off the allowed list");
    return rep;
}

ClassificationReport classify_qa4(const EllipticCurve& e) {
    ClassificationReport rep;
    rep.curve = e;
    rep.field = Field::QA4;
    FullInvariants v = invariants(e);
    Rational j = v.j;

    TorsionStructure t0 = rational_torsion(e);
    rep.trace.push_back({"rational-torsion", "division-polynomial root scan with group-law closure",
                         t0.str()});

    // 2-part: growth exactly on trivial rational 2-torsion with square
    // discriminant; no order-4 points appear beyond the rational ones
    uint64_t two_a = 1, two_b = 1;
    if (t0.b % 2 != 0) {
        if (is_square_rational(v.disc)) {
            two_a = two_b = 2;
            rep.trace.push_back({"2-growth", "trivial rational 2-torsion and square discriminant give full 2-torsion",
                                 "grows to (2,2)"});
        } else {
            rep.trace.push_back({"2-growth", "non-square discriminant keeps the 2-part", "no growth"});
        }
    } else {
        while (t0.a % (2 * two_a) == 0) two_a *= 2;
        while (t0.b % (2 * two_b) == 0) two_b *= 2;
        rep.trace.push_back({"2-part-frozen", "no new order-4 points over a field with no quadratic subextensions",
                             TorsionStructure(two_a, two_b).str()});
    }

    uint64_t odd = t0.b;
    while (odd % 2 == 0) odd /= 2;

    bool cm_special = j == Rational(0) || j == Rational(1728);
    if (cm_special) {
        rep.conservative = true;
        rep.trace.push_back({"cm-conservative", "twist-family analysis at j in {0, 1728} not tabulated here; "
                                                "keeping the rational odd part",
                             std::to_string(odd)});
    } else {
        rep.trace.push_back({"odd-part-base", "points of order 3 and 5 over this compositum are already rational",
                             std::to_string(odd)});
        Rational tparam;
        if (odd % 7 != 0 && strong_member(7, e, j, &tparam)) {
            odd *= 7;
            rep.trace.push_back({"order-7-cycle", "member of the generic model with a 7-isogeny kernel "
                                                  "rational over a cyclic cubic",
                                 "t = " + tparam.str()});
        }
        if (odd == 1 && strong_member(13, e, j, &tparam)) {
            odd = 13;
            rep.trace.push_back({"order-13-cycle", "member of the generic model with a 13-isogeny kernel "
                                                   "rational over a cyclic cubic",
                                 "t = " + tparam.str()});
        }
        if (odd % 3 == 0 && odd % 9 != 0 && strong_member(9, e, j, &tparam)) {
            odd *= 3;
            rep.trace.push_back({"order-9-cycle", "member of the generic twisted 9-isogeny model",
                                 "t = " + tparam.str()});
        }
    }

    rep.torsion = TorsionStructure(two_a, two_b * odd);
    rep.trace.push_back({"composition", "2-part and odd cyclic part assemble the torsion", rep.torsion.str()});

    if (!in_list(rep.torsion, allowed_qa4()))
        throw std::logic_error("classify_qa4: result off the allowed list");
    return rep;
}

ClassificationReport classify_c3inf(const EllipticCurve& e) {
    ClassificationReport rep = classify_qa4(e);
    rep.field = Field::C3inf;
    rep.trace.push_back({"cubic-compositum", "torsion growth over the A4 compositum happens over cyclic cubics, "
                                             "so the cyclic-cubic compositum gives the same groups",
                         rep.torsion.str()});
    return rep;
}

ClassificationReport classify(const EllipticCurve& e, Field f) {
    switch (f) {
        case Field::A4inf: return classify_a4inf(e);
        case Field::QA4: return classify_qa4(e);
        case Field::C3inf: return classify_c3inf(e);
    }
    throw std::invalid_argument("classify: unknown field");
}

} // namespace gtype
