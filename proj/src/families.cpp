#include "gtype/families.hpp"

#include <algorithm>
#include <map>

#include "gtype/serialize.hpp"

namespace gtype {

namespace {

RationalFunction rf(const char* expr) { return parse_ratfunc(expr, 't'); }

// jointly scaled integer coefficient vectors for num and den
void zform(const RationalFunction& f, std::vector<BigInt>& num, std::vector<BigInt>& den) {
    BigInt l(1);
    for (const Rational& c : f.num().coeffs()) l = BigInt::lcm(l, c.den());
    for (const Rational& c : f.den().coeffs()) l = BigInt::lcm(l, c.den());
    num.clear();
    den.clear();
    for (const Rational& c : f.num().coeffs()) num.push_back(c.num() * (l / c.den()));
    for (const Rational& c : f.den().coeffs()) den.push_back(c.num() * (l / c.den()));
}

JFamilyEntry make_entry(RationalFunction outer, std::optional<RationalFunction> sub) {
    JFamilyEntry e{std::move(outer), std::move(sub), {}, {}, {}, {}};
    zform(e.outer, e.outer_num_z, e.outer_den_z);
    if (e.substitution) zform(*e.substitution, e.sub_num_z, e.sub_den_z);
    return e;
}

std::vector<JFamily> build_jfamily_table() {
    std::vector<JFamily> t;
    auto add_map = [&](uint64_t a, uint64_t b, const char* expr) {
        t.push_back(JFamily{TorsionStructure(a, b), {make_entry(rf(expr), std::nullopt)}, {}});
    };
    auto add_sub = [&](uint64_t a, uint64_t b, const char* outer, const char* sub) {
        t.push_back(JFamily{TorsionStructure(a, b), {make_entry(rf(outer), rf(sub))}, {}});
    };
    auto add_set = [&](uint64_t a, uint64_t b, std::vector<const char*> js) {
        JFamily f{TorsionStructure(a, b), {}, {}};
        for (const char* j : js) f.jset.push_back(Rational::from_string(j));
        t.push_back(std::move(f));
    };

    add_map(1, 1, "t");
    add_map(1, 3, "(t+27)*(t+3)^3/t");
    add_map(1, 5, "(t^4 - 12*t^3 + 14*t^2 + 12*t + 1)^3/(t^5*(t^2 - 11*t - 1))");
    add_map(1, 7, "(t^2 + 13*t + 49)*(t^2 + 5*t + 1)^3/t");
    add_map(1, 9, "t^3*(t^3 - 24)^3/(t^3 - 27)");
    add_map(1, 13,
            "(t^4 - t^3 + 5*t^2 + t + 1)*(t^8 - 5*t^7 + 7*t^6 - 5*t^5 + 5*t^3 + 7*t^2 + 5*t + 1)^3"
            "/(t^13*(t^2 - 3*t - 1))");
    add_set(1, 15, {"-121945/32", "46969655/32768"});
    add_set(1, 21, {"-140625/8", "3375/2", "-1159088625/2097152", "-189613868625/128"});
    add_map(2, 2, "t^3/(t + 16)");
    add_map(2, 4, "(t^2 - 48)^3/((t - 8)*(t + 8))");
    add_map(2, 6, "(t + 6)^3*(t^3 + 18*t^2 + 84*t + 24)^3/(t*(t + 8)^3*(t + 9)^2)");
    add_map(2, 8, "(t^4 - 16*t^2 + 16)^3/(t^2*(t - 4)*(t + 4))");
    add_sub(2, 10, "(t^6 + 4*t^5 - 16*t + 16)^3/(t^5*(t - 1)^2*(t + 4))", "t - 1/t");
    add_map(2, 12, "(t^2 - 3)^3*(t^6 - 9*t^4 + 3*t^2 - 3)^3/((t - 3)*(t - 1)^3*t^4*(t + 1)^3*(t + 3))");
    add_set(2, 14, {"-3375", "16581375"});
    add_map(2, 16,
            "(t^16 - 8*t^14 + 12*t^12 + 8*t^10 - 10*t^8 + 8*t^6 + 12*t^4 - 8*t^2 + 1)^3"
            "/(t^16*(t - 1)^4*(t + 1)^4*(t^2 + 1)^2*(t^2 - 2*t - 1)*(t^2 + 2*t - 1))");
    add_map(2, 18, "(t^3 - 2)^3*(t^9 - 6*t^6 - 12*t^3 - 8)^3/(t^9*(t^3 - 8)*(t^3 + 1)^2)");
    add_map(3, 3, "27*(t + 1)^3*(t + 3)^3*(t^2 + 3)^3/(t^3*(t^2 + 3*t + 3)^3)");
    add_set(3, 9, {"0"});
    // two parameterizations for (4,4): square-discriminant twists and the
    // X_27-type component
    t.push_back(JFamily{TorsionStructure(4, 4),
                        {make_entry(rf("t^2 + 1728"), std::nullopt),
                         make_entry(rf("-4*(4*t^2 - 8*t + 1)^3*(4*t^2 + 8*t + 1)^3/(t^2*(4*t^2 + 1)^4)"),
                                    std::nullopt)},
                        {}});
    t.push_back(JFamily{TorsionStructure(4, 8),
                        {make_entry(rf("256*(t^4 - t^2 + 1)^3/((t - 1)^2*t^4*(t + 1)^2)"), std::nullopt),
                         make_entry(rf("-4*(t^4 - 8*t^3 + 2*t^2 + 8*t + 1)^3*(t^4 + 8*t^3 + 2*t^2 - 8*t + 1)^3"
                                       "/(t^2*(t - 1)^2*(t + 1)^2*(t^2 + 1)^8)"),
                                    std::nullopt)},
                        {}});
    add_map(4, 12, "(729*t^8 + 756*t^6 + 270*t^4 + 36*t^2 + 1)/t^6");
    add_sub(4, 16, "256*(t^2 - t + 1)^3/(t^2*(t - 1)^2)", "((t - 1/t)/2)^4");
    add_map(4, 28, "(t^4 + 13*t^2 + 49)*(t^4 + 5*t^2 + 1)^3/t^2");
    add_map(6, 6,
            "(t^3 - 57*t^2 + 3*t - 1)^3*(53*t^3 + 3*t^2 - 3*t + 1)^3"
            "*(8587*t^6 - 8214*t^5 + 2283*t^4 + 304*t^3 - 39*t^2 - 6*t + 1)^3"
            "/(729*(t - 1)^3*(4*t - 1)^6*t^6*(5*t + 1)^3*(43*t^2 - 8*t + 1)^3*(7*t^2 + t + 1)^6)");
    add_map(8, 8,
            "16*(t^4 - 2*t^3 + 2*t^2 + 2*t + 1)^3*(t^4 + 2*t^3 + 2*t^2 - 2*t + 1)^3"
            "/((t - 1)^4*t^4*(t + 1)^4*(t^2 + 1)^4)");
    return t;
}

} // namespace

const std::vector<JFamily>& jfamily_table() {
    static const std::vector<JFamily> table = build_jfamily_table();
    return table;
}

const JFamily& jfamily(const TorsionStructure& t) {
    for (const JFamily& f : jfamily_table())
        if (f.label == t) return f;
    throw std::invalid_argument("jfamily: no family for " + t.str());
}

namespace {

// homogeneous integer evaluation of a num/den pair at a/b
Rational eval_zform(const std::vector<BigInt>& num, const std::vector<BigInt>& den,
                    const Rational& t) {
    size_t deg = std::max(num.size(), den.size());
    std::vector<BigInt> apow(deg, BigInt(1)), bpow(deg, BigInt(1));
    for (size_t i = 1; i < deg; ++i) {
        apow[i] = apow[i - 1] * t.num();
        bpow[i] = bpow[i - 1] * t.den();
    }
    BigInt n(0), d(0);
    for (size_t i = 0; i < num.size(); ++i) n = n + num[i] * apow[i] * bpow[deg - 1 - i];
    for (size_t i = 0; i < den.size(); ++i) d = d + den[i] * apow[i] * bpow[deg - 1 - i];
    if (d.is_zero()) throw std::domain_error("jmap_eval: pole at evaluation point");
    return Rational(n, d);
}

} // namespace

Rational jmap_eval(const TorsionStructure& t, const Rational& tval) {
    const JFamily& f = jfamily(t);
    if (f.sporadic()) throw std::invalid_argument("jmap_eval: " + t.str() + " is a finite-set family");
    const JFamilyEntry& e = f.maps.front();
    Rational u = e.substitution ? eval_zform(e.sub_num_z, e.sub_den_z, tval) : tval;
    return eval_zform(e.outer_num_z, e.outer_den_z, u);
}

FiberResult jmap_fibers(const TorsionStructure& t, const Rational& j0) {
    const JFamily& f = jfamily(t);
    FiberResult out;
    if (f.sporadic()) {
        out.sporadic = true;
        out.member = std::find(f.jset.begin(), f.jset.end(), j0) != f.jset.end();
        return out;
    }
    std::vector<Rational> params;
    // fiber equations are assembled over the integers: with j0 = A/B in
    // lowest terms, solve B num(u) - A den(u) = 0
    auto fiber_eq = [](const std::vector<BigInt>& num, const std::vector<BigInt>& den,
                       const Rational& val) {
        std::vector<BigInt> r(std::max(num.size(), den.size()), BigInt(0));
        for (size_t i = 0; i < num.size(); ++i) r[i] = val.den() * num[i];
        for (size_t i = 0; i < den.size(); ++i) r[i] = r[i] - val.num() * den[i];
        return r;
    };
    for (const JFamilyEntry& e : f.maps) {
        std::vector<BigInt> eq = fiber_eq(e.outer_num_z, e.outer_den_z, j0);
        bool zero = true;
        for (const BigInt& c : eq) zero = zero && c.is_zero();
        if (zero) throw std::logic_error("jmap_fibers: constant map equals j0 identically");
        std::vector<Rational> us = rational_roots(std::move(eq));
        if (!e.substitution) {
            params.insert(params.end(), us.begin(), us.end());
        } else {
            for (const Rational& u : us) {
                std::vector<BigInt> sub_eq = fiber_eq(e.sub_num_z, e.sub_den_z, u);
                std::vector<Rational> ts;
                try {
                    ts = rational_roots(std::move(sub_eq));
                } catch (const std::domain_error&) {
                    continue;
                }
                for (const Rational& tv : ts) {
                    if (e.substitution->den().eval(tv).is_zero()) continue;
                    params.push_back(tv);
                }
            }
        }
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    out.params = std::move(params);
    out.member = !out.params.empty();
    return out;
}

bool family_matches(const TorsionStructure& t, const Rational& j0) {
    return jmap_fibers(t, j0).member;
}

RationalFunction model_disc(const WeierstrassCurve<RationalFunction>& m) {
    return curve_invariants(m).disc;
}

RationalFunction model_j(const WeierstrassCurve<RationalFunction>& m) {
    CurveInvariants<RationalFunction> v = curve_invariants(m);
    return v.c4 * v.c4 * v.c4 / v.disc;
}

EllipticCurve specialize(const WeierstrassCurve<RationalFunction>& m, const Rational& t) {
    return curve_from_coeffs({m.a1.eval(t), m.a2.eval(t), m.a3.eval(t), m.a4.eval(t), m.a6.eval(t)});
}

bool verify_disc_square_identity(const FamilyModel& m) {
    RationalFunction prod = model_disc(m.model) * RationalFunction(m.kernel);
    // N/D is a square in Q(t) iff N*D is a square in Q[t]
    return poly_square_root(prod.num() * prod.den()).has_value();
}

namespace {

std::vector<FamilyModel> build_family_models() {
    std::vector<FamilyModel> out;
    RationalFunction zero(0), one(1);

    auto add = [&](const std::string& label, WeierstrassCurve<RationalFunction> m, const char* kernel) {
        FamilyModel fm{label, std::move(m), parse_poly(kernel, 't')};
        if (!verify_disc_square_identity(fm))
            throw std::logic_error("family model " + label + ": discriminant-square identity failed");
        out.push_back(std::move(fm));
    };

    // 13-isogeny family
    add("13-isogeny",
        WeierstrassCurve<RationalFunction>{
            one, zero, zero,
            rf("-36*t/((t^2 + 6*t + 13)*(t^6 + 10*t^5 + 46*t^4 + 108*t^3 + 122*t^2 + 38*t - 1)^2)"),
            rf("-t/((t^2 + 6*t + 13)*(t^6 + 10*t^5 + 46*t^4 + 108*t^3 + 122*t^2 + 38*t - 1)^2)")},
        "t*(t^2 + 6*t + 13)");

    // 7-isogeny family
    add("7-isogeny",
        WeierstrassCurve<RationalFunction>{
            one, zero, zero,
            rf("-36*t/(t^4 + 14*t^3 + 63*t^2 + 70*t - 7)^2"),
            rf("-t/(t^4 + 14*t^3 + 63*t^2 + 70*t - 7)^2")},
        "t");

    // 5-torsion family: y^2 + (1-t)xy - ty = x^3 - t x^2
    add("5-torsion",
        WeierstrassCurve<RationalFunction>{rf("1 - t"), rf("-t"), rf("-t"), zero, zero},
        "t*(t^2 - 11*t - 1)");

    // 3-isogeny family (level 3 cover)
    add("3-isogeny",
        WeierstrassCurve<RationalFunction>{
            one, zero, zero,
            rf("-36*t/(t^2 + 18*t - 27)^2"),
            rf("-t/(t^2 + 18*t - 27)^2")},
        "t");

    return out;
}

} // namespace

const std::vector<FamilyModel>& family_models() {
    static const std::vector<FamilyModel> models = build_family_models();
    return models;
}

const FamilyModel& family_model(const std::string& label) {
    for (const FamilyModel& m : family_models())
        if (m.label == label) return m;
    throw std::invalid_argument("family_model: unknown label " + label);
}

Poly disc_square_kernel(const FamilyModel& m) { return m.kernel; }

TorsionStructure cm_rule_j0(const Rational& s) {
    if (s.is_zero()) throw std::invalid_argument("cm_rule_j0: s = 0");
    if (is_cube_rational(Rational(4) * s)) return TorsionStructure(3, 9);
    if (is_cube_rational(s)) return TorsionStructure(2, 6);
    return TorsionStructure(1, 3);
}

TorsionStructure cm_rule_j1728(const Rational& s) {
    if (s.is_zero()) throw std::invalid_argument("cm_rule_j1728: s = 0");
    if (is_square_rational(s) || is_square_rational(-s)) return TorsionStructure(4, 4);
    return TorsionStructure(2, 2);
}

const WeierstrassCurve<RationalFunction>& strong_model(int n) {
    static const std::map<int, WeierstrassCurve<RationalFunction>> models = [] {
        std::map<int, WeierstrassCurve<RationalFunction>> m;
        RationalFunction zero(0), one(1), t = RationalFunction::t();
        // y^2 + xy + t y = x^3 (the two-parameter model with a = 1)
        m.emplace(3, WeierstrassCurve<RationalFunction>{one, zero, t, zero, zero});
        m.emplace(5, WeierstrassCurve<RationalFunction>{rf("1 - t"), rf("-t"), rf("-t"), zero, zero});
        m.emplace(7, WeierstrassCurve<RationalFunction>{
                         zero, zero, zero,
                         rf("-27*(t^2 + 5*t + 1)*(t^2 + 13*t + 49)^3"),
                         rf("54*(t^2 + 13*t + 49)^4*(t^4 + 14*t^3 + 63*t^2 + 70*t - 7)")});
        // y^2 + t xy + y = x^3
        m.emplace(9, WeierstrassCurve<RationalFunction>{t, zero, one, zero, zero});
        m.emplace(13, WeierstrassCurve<RationalFunction>{
                          zero, zero, zero,
                          rf("-27*(t^4 - t^3 + 5*t^2 + t + 1)^3"
                             "*(t^8 - 5*t^7 + 7*t^6 - 5*t^5 + 5*t^3 + 7*t^2 + 5*t + 1)"),
                          rf("54*(t^2 + 1)*(t^4 - t^3 + 5*t^2 + t + 1)^4"
                             "*(t^12 - 8*t^11 + 25*t^10 - 44*t^9 + 40*t^8 + 18*t^7 - 40*t^6"
                             " - 18*t^5 + 40*t^4 + 44*t^3 + 25*t^2 + 8*t + 1)")});
        return m;
    }();
    auto it = models.find(n);
    if (it == models.end()) throw std::invalid_argument("strong_model: N must be one of 3, 5, 7, 9, 13");
    return it->second;
}

const WeierstrassCurve<RationalFunction>& strong_2x14_model() {
    static const WeierstrassCurve<RationalFunction> m{
        RationalFunction(0), RationalFunction(0), RationalFunction(0),
        rf("-27*(t^2 - t + 7)^3*(t^2 + t + 7)^3*(t^4 + 5*t^2 + 1)"),
        rf("54*(t^2 - t + 7)^4*(t^2 + t + 7)^4*(t^8 + 14*t^6 + 63*t^4 + 70*t^2 - 7)")};
    return m;
}

const WeierstrassCurve<RationalFunction>& strong_18_model() {
    static const WeierstrassCurve<RationalFunction> m{
        rf("t^3 - 2"), RationalFunction(0), rf("t^3"), RationalFunction(0), RationalFunction(0)};
    return m;
}

Poly strong_18_resolvent(const Rational& t) {
    // x^3 - t(t^3 + 3t - 2) x^2 + t^3 (t^3 - 2) x + t^6
    Rational c2 = -t * (t * t * t + Rational(3) * t - Rational(2));
    Rational t3 = t * t * t;
    Rational c1 = t3 * (t3 - Rational(2));
    Rational c0 = t3 * t3;
    return Poly(std::vector<Rational>{c0, c1, c2, Rational(1)});
}

CubicCondition strong_18_condition(const Rational& t) {
    Poly f = strong_18_resolvent(t);
    if (!rational_roots(f).empty()) return CubicCondition::conditional; // degenerate parameter
    return is_square_rational(discriminant(f)) ? CubicCondition::cyclic : CubicCondition::conditional;
}

const std::vector<std::pair<long long, Rational>>& cm_j_list() {
    static const std::vector<std::pair<long long, Rational>> js = {
        {-3, Rational(0)},
        {-4, Rational(1728)},
        {-7, Rational(-3375)},
        {-8, Rational(8000)},
        {-11, Rational(-32768)},
        {-12, Rational(54000)},
        {-16, Rational(287496)},
        {-19, Rational(-884736)},
        {-27, Rational(-12288000)},
        {-28, Rational(16581375)},
        {-43, Rational(-884736000)},
        {-67, Rational(-147197952000)},
        {-163, Rational::from_string("-262537412640768000")},
    };
    return js;
}

const std::vector<std::pair<Rational, TorsionStructure>>& cm_torsion_table() {
    static const std::vector<std::pair<Rational, TorsionStructure>> table = {
        {Rational(-12288000), TorsionStructure(1, 9)},      // the 27a class
        {Rational(287496), TorsionStructure(2, 4)},         // 32a
        {Rational(54000), TorsionStructure(2, 6)},          // 36a
        {Rational(-3375), TorsionStructure(2, 14)},         // 49a
        {Rational(-32768), TorsionStructure(1, 1)},         // 121b
        {Rational(8000), TorsionStructure(2, 2)},           // 256a
        {Rational(-884736), TorsionStructure(1, 1)},        // 361a
        {Rational(16581375), TorsionStructure(2, 14)},      // 784h
        {Rational(-884736000), TorsionStructure(1, 1)},     // 1849a
        {Rational(-147197952000), TorsionStructure(1, 1)},  // 4489a
        {Rational::from_string("-262537412640768000"), TorsionStructure(1, 1)}, // 26569a
    };
    return table;
}

nlohmann::ordered_json families_catalog_json() {
    nlohmann::ordered_json out;
    auto fams = nlohmann::ordered_json::array();
    for (const JFamily& f : jfamily_table()) {
        nlohmann::ordered_json jf;
        jf["label"] = f.label.to_json();
        if (f.sporadic()) {
            auto arr = nlohmann::ordered_json::array();
            for (const Rational& j : f.jset) arr.push_back(j.str());
            jf["jset"] = arr;
        } else {
            auto arr = nlohmann::ordered_json::array();
            for (const JFamilyEntry& e : f.maps) {
                nlohmann::ordered_json jm;
                jm["map"] = ratfunc_to_json(e.outer);
                if (e.substitution) jm["substitution"] = ratfunc_to_json(*e.substitution);
                arr.push_back(jm);
            }
            jf["maps"] = arr;
        }
        fams.push_back(jf);
    }
    out["families"] = fams;

    auto models = nlohmann::ordered_json::array();
    for (const FamilyModel& m : family_models()) {
        nlohmann::ordered_json jm;
        jm["label"] = m.label;
        auto coeffs = nlohmann::ordered_json::array();
        for (const RationalFunction* c : {&m.model.a1, &m.model.a2, &m.model.a3, &m.model.a4, &m.model.a6})
            coeffs.push_back(ratfunc_to_json(*c));
        jm["coefficients"] = coeffs;
        jm["disc_square_kernel"] = poly_to_json(m.kernel);
        models.push_back(jm);
    }
    out["models"] = models;
    return out;
}

} // namespace gtype
