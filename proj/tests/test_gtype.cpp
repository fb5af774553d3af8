#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtype/gtypes.hpp"
#include "gtype/intfactor.hpp"
#include "gtype/smallgroups.hpp"

using namespace gtype;

namespace {

// structural oracle: H has a normal elementary-abelian q-subgroup with
// elementary-abelian-p quotient
bool weak_dpq_structural(const FiniteGroup& h, uint64_t p, uint64_t q) {
    for (const auto& elems : all_subgroups(h)) {
        FiniteGroup n = subgroup_from_elements(h, elems);
        if (!is_normal(h, n)) continue;
        if (!is_abelian(n)) continue;
        if (n.order() > 1 && exponent(n) != q) continue;
        FiniteGroup quo = quotient(h, n);
        if (!is_abelian(quo)) continue;
        if (quo.order() > 1 && exponent(quo) != p) continue;
        return true;
    }
    return false;
}

} // namespace

TEST_CASE("free word parsing and evaluation") {
    FreeWord w = FreeWord::parse("x1^4");
    CHECK(w.arity() == 1);
    CHECK(w.str() == "x1^4");

    FreeWord c = FreeWord::parse("[x1,x2]");
    CHECK(c.arity() == 2);
    CHECK(c.letters().size() == 4);

    FreeWord nested = FreeWord::parse("[x1,[x1,x2]]");
    CHECK(nested.arity() == 2);

    // reduction: x1 * x1^-1 is empty
    FreeWord r = FreeWord::generator(1) * FreeWord::generator(1).inverse();
    CHECK(r.empty());

    CHECK_THROWS(FreeWord::parse("x0"));
    CHECK_THROWS(FreeWord::parse("[x1 x2]"));
    CHECK_THROWS(FreeWord::parse("y1"));

    // evaluation in S3: [x1,x2] at two transpositions is a 3-cycle
    FiniteGroup s3 = symmetric_group(3);
    Elem t1{1, 0, 2}, t2{0, 2, 1};
    Elem val = FreeWord::parse("[x1,x2]").eval(*s3.carrier, {t1, t2});
    CHECK(element_order(*s3.carrier, val) == 3);
}

TEST_CASE("weak and strong D_{p,q} spec examples") {
    FiniteGroup a4 = alternating_group(4);
    FiniteGroup s3 = symmetric_group(3);
    CHECK(is_weak_dpq_type(a4, 3, 2));
    CHECK_FALSE(is_weak_dpq_type(s3, 3, 2));
    CHECK_FALSE(is_weak_dpq_type(cyclic_group(4), 3, 2));

    CHECK_FALSE(is_strong_dpq_type(cyclic_group(2), 3, 2));
    CHECK(is_strong_dpq_type(a4, 3, 2));
    CHECK(is_strong_dpq_type(cyclic_group(3), 3, 2));

    // S3 is of weak/strong D_{2,3} type
    CHECK(is_weak_dpq_type(s3, 2, 3));
    CHECK(is_strong_dpq_type(s3, 2, 3));
    CHECK_FALSE(is_strong_dpq_type(cyclic_group(3), 2, 3));

    CHECK_THROWS(is_weak_dpq_type(a4, 4, 2));
    CHECK_THROWS(is_weak_dpq_type(a4, 3, 3));
}

TEST_CASE("lambda criterion agrees with the structural characterization") {
    // this is the acceptance-1 equivalence, spot-checked here on the corpus
    for (const auto& ng : small_group_corpus()) {
        CAPTURE(ng.name);
        CHECK(is_weak_dpq_type(ng.group, 3, 2) == weak_dpq_structural(ng.group, 3, 2));
    }
}

TEST_CASE("strong implies weak on the corpus") {
    for (const auto& ng : small_group_corpus()) {
        for (auto [p, q] : {std::pair<uint64_t, uint64_t>{3, 2}, {2, 3}, {5, 2}}) {
            if (is_strong_dpq_type(ng.group, p, q)) CHECK(is_weak_dpq_type(ng.group, p, q));
        }
    }
}

TEST_CASE("generalized A4 type spec examples") {
    CHECK(is_generalized_a4_type(cyclic_group(6)));
    FiniteGroup c2cubed = direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
    CHECK(is_generalized_a4_type(c2cubed));
    CHECK(is_generalized_a4_type(alternating_group(4)));
    CHECK_FALSE(is_generalized_a4_type(symmetric_group(4)));
    CHECK_FALSE(is_generalized_a4_type(symmetric_group(3)));
    // exponent of a generalized A4-type group divides 6
    for (const auto& ng : small_group_corpus())
        if (is_generalized_a4_type(ng.group)) CHECK(6 % exponent(ng.group) == 0);
    // closure under quotients
    FiniteGroup a4 = alternating_group(4);
    for (const auto& elems : all_subgroups(a4)) {
        FiniteGroup n = subgroup_from_elements(a4, elems);
        if (!is_normal(a4, n)) continue;
        CHECK(is_generalized_a4_type(quotient(a4, n)));
    }
}

TEST_CASE("build_dpq spec examples") {
    FiniteGroup d32 = build_dpq(3, 2);
    CHECK(d32.order() == 12);
    CHECK(isomorphic(d32, alternating_group(4)));

    FiniteGroup d23 = build_dpq(2, 3);
    CHECK(d23.order() == 6);
    CHECK(isomorphic(d23, symmetric_group(3)));

    FiniteGroup d52 = build_dpq(5, 2);
    CHECK(d52.order() == 80);

    DpqSpec s = dpq_spec(5, 2);
    CHECK(s.f == 4);
    CHECK(s.points == 16);

    CHECK_THROWS(build_dpq(3, 3));
    CHECK_THROWS(build_dpq(8191, 2)); // q^f = 8192 fine but order too large
}

TEST_CASE("dpq affine lambda check matches explicit groups on small pairs") {
    for (auto [p, q] : {std::pair<uint64_t, uint64_t>{3, 2}, {2, 3}, {5, 2}, {2, 5},
                        {7, 2}, {2, 7}, {3, 5}, {5, 3}, {7, 3}, {13, 3}}) {
        CAPTURE(p);
        CAPTURE(q);
        CHECK(dpq_lambda_check(p, q));
        CHECK(dpq_lambda_check(p, q, false)); // generic route agrees
        FiniteGroup d = build_dpq(p, q);
        CHECK(lambda_subgroup(lambda_subgroup(d, p), q).is_trivial());
    }
}

TEST_CASE("satisfies_relation spec examples") {
    FreeWord x4 = FreeWord::parse("x1^4");
    CHECK(satisfies_relation(dihedral_group(4), x4));
    CHECK_FALSE(satisfies_relation(cyclic_group(8), x4));

    FreeWord q8rel = FreeWord::parse("[x1,[x1,x2]]");
    CHECK(satisfies_relation(quaternion_group(), q8rel));

    // witness extraction
    std::vector<Elem> bad;
    CHECK_FALSE(satisfies_relation(cyclic_group(8), x4, false, &bad));
    REQUIRE(bad.size() == 1);
    Elem val = x4.eval(*cyclic_group(8).carrier, bad);
    CHECK(val != cyclic_group(8).carrier->identity());
}

TEST_CASE("D4 relations characterize exponent 4 and class <= 2 on the corpus") {
    FreeWord r1 = FreeWord::parse("x1^4");
    FreeWord r2 = FreeWord::parse("[x1,[x1,x2]]");
    FreeWord r3 = FreeWord::parse("[x2,[x1,x2]]");
    for (const auto& ng : small_group_corpus()) {
        bool sat = satisfies_relation(ng.group, r1) && satisfies_relation(ng.group, r2) &&
                   satisfies_relation(ng.group, r3);
        auto cls = nilpotency_class(ng.group);
        bool structural = 4 % exponent(ng.group) == 0 && cls.has_value() && *cls <= 2;
        CAPTURE(ng.name);
        CHECK(sat == structural);
    }
}

TEST_CASE("universal groups") {
    FiniteGroup u22 = universal_group(cyclic_group(2), 2);
    CHECK(u22.order() == 4);
    CHECK(isomorphic(u22, direct_product(cyclic_group(2), cyclic_group(2))));
    CHECK(u22.generators.size() == 2);

    FiniteGroup us3 = universal_group(symmetric_group(3), 1);
    CHECK(us3.order() == 6);
    CHECK(isomorphic(us3, cyclic_group(6)));

    FiniteGroup ua4 = universal_group(alternating_group(4), 1);
    CHECK(isomorphic(ua4, cyclic_group(6)));

    // quotients of the 1-generated universal group are cyclic of order
    // dividing exp(G)
    for (const auto& name : {"S3", "D4", "Q8", "A4", "C6"}) {
        FiniteGroup g;
        for (const auto& ng : small_group_corpus())
            if (ng.name == name) g = ng.group;
        if (g.elements.empty()) g = alternating_group(4);
        FiniteGroup u = universal_group(g, 1);
        CHECK(u.order() == exponent(g));
        for (const auto& elems : all_subgroups(u)) {
            FiniteGroup n = subgroup_from_elements(u, elems);
            FiniteGroup q = quotient(u, n);
            CHECK(exponent(g) % q.order() == 0);
            bool cyclic = false;
            for (const Elem& e : q.elements) cyclic = cyclic || element_order(*q.carrier, e) == q.order();
            CHECK(cyclic);
        }
    }
}

TEST_CASE("unit groups and the cyclotomic criterion") {
    FiniteGroup u7 = unit_group_mod_n(7);
    CHECK(u7.order() == 6);
    CHECK(isomorphic(u7, cyclic_group(6)));

    FiniteGroup u8 = unit_group_mod_n(8);
    CHECK(u8.order() == 4);
    CHECK(isomorphic(u8, direct_product(cyclic_group(2), cyclic_group(2))));

    FiniteGroup u504 = unit_group_mod_n(504);
    CHECK(exponent(u504) == 6);

    CHECK(cyclotomic_in_gen_a4(9));
    CHECK_FALSE(cyclotomic_in_gen_a4(5));
    CHECK(cyclotomic_in_gen_a4(504));
    CHECK_THROWS(unit_group_mod_n(1));
}

TEST_CASE("cyclotomic scan over a modest range matches divisibility") {
    auto res = scan_cyclotomic(120, false);
    for (uint64_t n = 1; n <= 120; ++n) CHECK(static_cast<bool>(res[n - 1]) == (504 % n == 0));
#ifdef _OPENMP
    CHECK(scan_cyclotomic(120, true) == res);
#endif
}

TEST_CASE("bounded generalized-type search") {
    FiniteGroup s3 = symmetric_group(3);
    // C3 is transitive in S3, so C3 itself is generalized S3-type
    CHECK(is_generalized_type(cyclic_group(3), s3, 2) == Trilean::yes);
    CHECK(is_generalized_type(symmetric_group(3), s3, 1) == Trilean::yes);
    // C4 is not even of weak S3-type
    CHECK(is_generalized_type(cyclic_group(4), s3, 2) == Trilean::no);
    // C6 = C2 x C3 needs arity 2 over {S3, C3}
    CHECK(is_generalized_type(cyclic_group(6), s3, 2) == Trilean::yes);
    // A4 with a tiny budget reports undecided rather than guessing
    CHECK(is_generalized_type(symmetric_group(4), alternating_group(4), 3, 5) == Trilean::undecided);
}
