#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtype/gl2.hpp"
#include "gtype/gtypes.hpp"
#include "gtype/smallgroups.hpp"

using namespace gtype;

// the OpenMP kernels must agree with their serial reference paths

TEST_CASE("cyclotomic scan: parallel equals serial") {
    auto serial = scan_cyclotomic(150, false);
    auto parallel = scan_cyclotomic(150, true);
    CHECK(serial == parallel);
}

TEST_CASE("relation scan: parallel equals serial, including the witness") {
    FreeWord w = FreeWord::parse("[x1,[x1,x2]]");
    for (const auto& ng : groups_up_to_16()) {
        std::vector<Elem> ws, wp;
        bool rs = satisfies_relation(ng.group, w, false, &ws);
        bool rp = satisfies_relation(ng.group, w, true, &wp);
        CAPTURE(ng.name);
        CHECK(rs == rp);
        CHECK(ws == wp); // the reported witness is the minimal failing tuple
    }
    FreeWord x4 = FreeWord::parse("x1^4");
    std::vector<Elem> ws, wp;
    CHECK_FALSE(satisfies_relation(cyclic_group(8), x4, false, &ws));
    CHECK_FALSE(satisfies_relation(cyclic_group(8), x4, true, &wp));
    CHECK(ws == wp);
}

TEST_CASE("overgroup scan: parallel equals serial") {
    FiniteGroup cartan = closure(std::make_shared<MatCarrier>(3),
                                 {mat2(2, 0, 0, 1, 3), mat2(1, 0, 0, 2, 3)});
    MaximalityReport serial = verify_maximal(3, cartan.generators, "genA4-full-torsion", false);
    MaximalityReport parallel = verify_maximal(3, cartan.generators, "genA4-full-torsion", true);
    CHECK(serial.satisfies == parallel.satisfies);
    CHECK(serial.maximal_among_overgroups == parallel.maximal_among_overgroups);
    CHECK(serial.rational_torsion == parallel.rational_torsion);
    CHECK(serial.contained_in_split_cartan == parallel.contained_in_split_cartan);
}
