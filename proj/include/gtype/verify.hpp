// The verification battery: every headline computation, packaged as named
// checks with a citation label and a pass/fail verdict.  The acceptance
// binary and the CLI `verify` subcommand both run off this table.

#ifndef GTYPE_VERIFY_HPP
#define GTYPE_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gtype {

struct VerifyOptions {
    uint64_t seed = 20260808;
    bool parallel = true;
    std::string fixtures_path; // empty: probe the default locations
    size_t audit_samples = 500;
    size_t sweep_target = 200;
};

struct VerifyCheck {
    std::string id;    // C1..C13
    std::string suite; // gtype | gl2 | families | classify
    std::string label;
    std::string cite;
    std::function<bool(const VerifyOptions&, std::string& detail)> run;
};

const std::vector<VerifyCheck>& verification_battery();

struct CheckOutcome {
    std::string id, suite, label, cite, detail;
    bool pass = false;
    double seconds = 0;
};

// run checks, optionally filtered by suite name or check id; empty filters
// mean all
std::vector<CheckOutcome> run_battery(const VerifyOptions& opts,
                                      const std::string& suite_filter = "",
                                      const std::string& id_filter = "");

} // namespace gtype

#endif
