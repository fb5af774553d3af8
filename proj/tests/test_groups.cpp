#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gtype/smallgroups.hpp"

using namespace gtype;

namespace {

// brute-force oracle: commutators over all element pairs
FiniteGroup commutators_brute(const FiniteGroup& g) {
    std::vector<Elem> seed;
    for (const Elem& a : g.elements)
        for (const Elem& b : g.elements)
            seed.push_back(g.carrier->compose(
                g.carrier->compose(g.carrier->inverse(a), g.carrier->inverse(b)),
                g.carrier->compose(a, b)));
    return closure(g.carrier, seed);
}

// brute-force oracle for lambda_p: commutators plus all p-th powers
FiniteGroup lambda_brute(const FiniteGroup& g, uint64_t p) {
    std::vector<Elem> seed;
    for (const Elem& a : g.elements)
        for (const Elem& b : g.elements)
            seed.push_back(g.carrier->compose(
                g.carrier->compose(g.carrier->inverse(a), g.carrier->inverse(b)),
                g.carrier->compose(a, b)));
    for (const Elem& a : g.elements) {
        Elem acc = g.carrier->identity();
        for (uint64_t i = 0; i < p; ++i) acc = g.carrier->compose(acc, a);
        seed.push_back(acc);
    }
    return closure(g.carrier, seed);
}

} // namespace

TEST_CASE("closure basics and spec examples") {
    // {(1 2 3), (1 2)(3 4)} generates A4, order 12
    auto carrier = std::make_shared<PermCarrier>(4);
    Elem three{1, 2, 0, 3};
    Elem vv{1, 0, 3, 2};
    FiniteGroup a4 = closure(carrier, {three, vv});
    CHECK(a4.order() == 12);
    CHECK(isomorphic(a4, alternating_group(4)));

    FiniteGroup triv = closure(carrier, {});
    CHECK(triv.order() == 1);

    // closure is idempotent
    FiniteGroup again = closure(carrier, a4.elements);
    CHECK(again.elements == a4.elements);

    // size cap
    CHECK_THROWS_AS(closure(std::make_shared<PermCarrier>(8),
                            symmetric_group(5).generators, 10),
                    GroupSizeError);
}

TEST_CASE("corpus construction sanity") {
    auto corpus = groups_up_to_16();
    CHECK(corpus.size() == 42);
    std::map<size_t, int> by_order;
    for (const auto& ng : corpus) by_order[ng.group.order()] += 1;
    CHECK(by_order[16] == 14);
    CHECK(by_order[12] == 5);
    CHECK(by_order[8] == 5);
    // pairwise non-isomorphic
    for (size_t i = 0; i < corpus.size(); ++i)
        for (size_t j = i + 1; j < corpus.size(); ++j) {
            if (corpus[i].group.order() != corpus[j].group.order()) continue;
            CAPTURE(corpus[i].name);
            CAPTURE(corpus[j].name);
            CHECK_FALSE(isomorphic(corpus[i].group, corpus[j].group));
        }
}

TEST_CASE("commutator subgroup against brute oracle") {
    FiniteGroup a4 = alternating_group(4);
    FiniteGroup der = commutator_subgroup(a4);
    CHECK(der.order() == 4);  // V4
    CHECK(is_normal(a4, der));

    FiniteGroup s3 = symmetric_group(3);
    CHECK(commutator_subgroup(s3).order() == 3);  // A3

    CHECK(commutator_subgroup(cyclic_group(12)).order() == 1);

    for (const auto& ng : groups_up_to_16()) {
        FiniteGroup fast = commutator_subgroup(ng.group);
        FiniteGroup brute = commutators_brute(ng.group);
        CAPTURE(ng.name);
        CHECK(fast.elements == brute.elements);
    }
}

TEST_CASE("lambda_p spec examples and oracle") {
    FiniteGroup a4 = alternating_group(4);
    CHECK(lambda_subgroup(a4, 3).order() == 4);   // V4
    CHECK(lambda_subgroup(cyclic_group(4), 2).order() == 2);
    FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
    CHECK(lambda_subgroup(v4, 2).order() == 1);

    for (const auto& ng : groups_up_to_16()) {
        for (uint64_t p : {2, 3}) {
            FiniteGroup fast = lambda_subgroup(ng.group, p);
            FiniteGroup brute = lambda_brute(ng.group, p);
            CAPTURE(ng.name);
            CHECK(fast.elements == brute.elements);
            // G/lambda_p(G) is elementary abelian of exponent dividing p
            FiniteGroup q = quotient(ng.group, fast);
            CHECK(is_abelian(q));
            CHECK((q.order() == 1 || exponent(q) == p));
        }
    }
}

TEST_CASE("quotient spec examples") {
    FiniteGroup a4 = alternating_group(4);
    FiniteGroup v4 = commutator_subgroup(a4);
    FiniteGroup q = quotient(a4, v4);
    CHECK(q.order() == 3);
    CHECK(isomorphic(q, cyclic_group(3)));

    CHECK(quotient(a4, a4).order() == 1);
    FiniteGroup triv = subgroup_from_elements(a4, {a4.carrier->identity()});
    CHECK(isomorphic(quotient(a4, triv), a4));

    // non-normal rejected: <(0 1)> inside S3
    FiniteGroup s3 = symmetric_group(3);
    Elem swap{1, 0, 2};
    FiniteGroup h = closure(s3.carrier, {swap});
    CHECK_THROWS_AS(quotient(s3, h), std::invalid_argument);

    // sizes multiply across the corpus
    for (const auto& ng : small_group_corpus()) {
        FiniteGroup der = commutator_subgroup(ng.group);
        CHECK(ng.group.order() == der.order() * quotient(ng.group, der).order());
    }
}

TEST_CASE("abelian invariants") {
    CHECK(abelian_invariants(alternating_group(4)) == std::vector<uint64_t>{3});
    FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
    CHECK(abelian_invariants(v4) == std::vector<uint64_t>({2, 2}));
    CHECK(abelian_invariants(cyclic_group(6)) == std::vector<uint64_t>{6});
    CHECK(abelian_invariants(symmetric_group(4)) == std::vector<uint64_t>{2});
    CHECK(abelian_invariants(quaternion_group()) == std::vector<uint64_t>({2, 2}));
    // divisibility chain
    for (const auto& ng : small_group_corpus()) {
        auto inv = abelian_invariants(ng.group);
        for (size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
    }
}

TEST_CASE("exponent") {
    CHECK(exponent(alternating_group(4)) == 6);
    CHECK(exponent(symmetric_group(3)) == 6);
    CHECK(exponent(cyclic_group(8)) == 8);
    for (const auto& ng : small_group_corpus())
        CHECK(ng.group.order() % exponent(ng.group) == 0);
}

TEST_CASE("nilpotency class") {
    CHECK(nilpotency_class(dihedral_group(4)) == 2);
    CHECK(nilpotency_class(cyclic_group(5)) == 1);
    CHECK(nilpotency_class(direct_product(cyclic_group(3), cyclic_group(9))) == 1);
    CHECK_FALSE(nilpotency_class(symmetric_group(3)).has_value());
    CHECK_FALSE(nilpotency_class(alternating_group(4)).has_value());
    CHECK(nilpotency_class(quaternion_group()) == 2);
    CHECK(nilpotency_class(dicyclic_group(4)) == 3);  // Q16
    CHECK(nilpotency_class(trivial_group()) == 0);
}

TEST_CASE("subdirect products") {
    FiniteGroup a4 = alternating_group(4);
    FiniteGroup prod = direct_product(a4, a4);
    auto pc = std::dynamic_pointer_cast<const ProductCarrier>(prod.carrier);
    REQUIRE(pc);

    // diagonal
    std::vector<Elem> diag_gens;
    for (const Elem& g : a4.generators) diag_gens.push_back(pc->embed({g, g}));
    FiniteGroup diag = closure(prod.carrier, diag_gens);
    CHECK(diag.order() == 12);
    CHECK(is_subdirect_product(diag, {a4, a4}));

    // A4 x {e}
    std::vector<Elem> left_gens;
    for (const Elem& g : a4.generators) left_gens.push_back(pc->embed({g, a4.carrier->identity()}));
    FiniteGroup left = closure(prod.carrier, left_gens);
    CHECK_FALSE(is_subdirect_product(left, {a4, a4}));

    // twisted diagonal {(g, sigma(g))} for an automorphism sigma (conjugation)
    Elem t{1, 2, 0, 3}; //（0 1 2)
    auto conj = [&](const Elem& g) {
        return a4.carrier->compose(a4.carrier->compose(t, g), a4.carrier->inverse(t));
    };
    std::vector<Elem> tw_gens;
    for (const Elem& g : a4.generators) tw_gens.push_back(pc->embed({g, conj(g)}));
    FiniteGroup tw = closure(prod.carrier, tw_gens);
    CHECK(tw.order() == 12);
    CHECK(is_subdirect_product(tw, {a4, a4}));
}

TEST_CASE("isomorphic spec examples") {
    CHECK_FALSE(isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
    CHECK_FALSE(isomorphic(dihedral_group(4), quaternion_group()));
    CHECK(isomorphic(dicyclic_group(2), quaternion_group()));
    CHECK(isomorphic(quaternion_group(), dicyclic_group(2))); // symmetric
    CHECK(isomorphic(affine_group(8, 7), dihedral_group(8)));
    // C6 as Z/6 vs C2 x C3
    CHECK(isomorphic(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))));
    // equivalence-relation spot checks on the corpus
    auto corpus = groups_up_to_16();
    for (const auto& ng : corpus) CHECK(isomorphic(ng.group, ng.group));
}

TEST_CASE("all_subgroups counts") {
    // S3: 6 subgroups; A4: 10; Q8: 6; C2^3: 16
    CHECK(all_subgroups(symmetric_group(3)).size() == 6);
    CHECK(all_subgroups(alternating_group(4)).size() == 10);
    CHECK(all_subgroups(quaternion_group()).size() == 6);
    FiniteGroup c2c2c2 = direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
    CHECK(all_subgroups(c2c2c2).size() == 16);
}

TEST_CASE("group json shape") {
    auto j = alternating_group(4).to_json();
    CHECK(j["carrier"]["kind"] == "permutation");
    CHECK(j["carrier"]["degree"] == 4);
    CHECK(j["order"] == 12);
    CHECK(j["generators"].is_array());
}
