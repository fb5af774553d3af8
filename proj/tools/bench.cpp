// Benchmark for the OpenMP kernels against their serial reference paths:
// the cyclotomic scan, the relation tuple scan, the classification batch,
// and (with --heavy) the mod-9 overgroup scan.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gtype/classify.hpp"
#include "gtype/gl2.hpp"
#include "gtype/gtypes.hpp"
#include "gtype/smallgroups.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gtype;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %.2fx\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

// a batch of j-classifications, optionally OpenMP-parallel
void classify_batch(bool parallel, size_t n) {
    std::vector<Rational> js;
    for (size_t i = 0; i < n; ++i)
        js.push_back(jmap_eval(TorsionStructure(2, 6), Rational(static_cast<long long>(2 * i + 3), 7)));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(js.size()); ++i) {
        volatile bool sink = a4inf_from_j(js[i]).torsion.trivial();
        (void)sink;
    }
    (void)parallel;
}

} // namespace

int main(int argc, char** argv) {
    bool heavy = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--heavy") heavy = true;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel runs fall back to serial\n");
#endif

    // cyclotomic scan
    {
        double s = time_of([] { scan_cyclotomic(420, false); });
        double p = time_of([] { scan_cyclotomic(420, true); });
        report("cyclotomic scan (n<=420)", s, p);
    }

    // relation tuple scan: a rank-2 law that holds, so both paths scan the
    // whole tuple space
    {
        FiniteGroup g = direct_product(direct_product(dihedral_group(4), dihedral_group(4)),
                                       direct_product(cyclic_group(2), cyclic_group(2)));
        FreeWord w = FreeWord::parse("[x1,[x1,x2]]");
        double s = time_of([&] { satisfies_relation(g, w, false); });
        double p = time_of([&] { satisfies_relation(g, w, true); });
        report("relation scan (|H|=256)", s, p);
    }

    // classification batch over a family strip
    {
        double s = time_of([] { classify_batch(false, 60); });
        double p = time_of([] { classify_batch(true, 60); });
        report("classification batch (60)", s, p);
    }

    if (heavy) {
        std::vector<Elem> four = {mat2(1, 0, 0, 8, 9), mat2(1, 0, 0, 4, 9),
                                  mat2(8, 0, 0, 8, 9), mat2(7, 0, 0, 4, 9)};
        double s = time_of([&] { verify_maximal(9, four, "genA4-full-torsion", false); });
        double p = time_of([&] { verify_maximal(9, four, "genA4-full-torsion", true); });
        report("mod-9 overgroup scan", s, p);
    }
    return 0;
}
