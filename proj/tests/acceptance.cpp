// Acceptance suite: runs the verification battery and prints one pass/fail
// line per criterion.  Exit status 0 only when every executed criterion
// passes.
//
//   acceptance [--criterion C7] [--suite gl2] [--serial] [--seed N]
//              [--fixtures path]

#include <cstdio>
#include <cstring>
#include <string>

#include "gtype/verify.hpp"

int main(int argc, char** argv) {
    gtype::VerifyOptions opts;
    std::string id_filter, suite_filter;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) id_filter = argv[++i];
        else if (a == "--suite" && i + 1 < argc) suite_filter = argv[++i];
        else if (a == "--serial") opts.parallel = false;
        else if (a == "--seed" && i + 1 < argc) opts.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (a == "--fixtures" && i + 1 < argc) opts.fixtures_path = argv[++i];
        else {
            std::fprintf(stderr, "unknown argument: %s\n", a.c_str());
            return 2;
        }
    }

    auto outcomes = gtype::run_battery(opts, suite_filter, id_filter);
    if (outcomes.empty()) {
        std::fprintf(stderr, "no checks matched the filter\n");
        return 2;
    }
    bool all = true;
    for (const auto& o : outcomes) {
        std::printf("[%s] %s: %s — %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", o.id.c_str(),
                    o.label.c_str(), o.detail.c_str(), o.seconds);
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
