// Curve records by label: bundled fixtures first, then the on-disk cache,
// then the configured remote database.  Remote fetches are cached; offline
// mode never opens a socket.
//
// Environment: GTYPE_CACHE_DIR, GTYPE_DB_URL, GTYPE_OFFLINE=1,
// GTYPE_FIXTURES (path to the bundled fixtures file).

#ifndef GTYPE_CURVEDB_HPP
#define GTYPE_CURVEDB_HPP

#include <chrono>
#include <stdexcept>
#include <string>

#include "gtype/curves.hpp"

namespace gtype {

struct LabelSyntaxError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownLabelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NetworkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CurveRecord {
    std::string label;
    std::vector<Rational> coefficients; // a1, a2, a3, a4, a6
    std::string source;                 // inline | cache | remote
    EllipticCurve curve() const;
    nlohmann::ordered_json to_json() const;
    static CurveRecord from_json(const nlohmann::json& j);
};

bool valid_label(const std::string& label);

class CurveDb {
  public:
    struct Options {
        std::string fixtures_path;
        std::string cache_dir;
        std::string base_url;
        bool offline = false;
        unsigned min_request_interval_ms = 0; // GTYPE_RATE_MS
    };
    static Options from_env();

    explicit CurveDb(Options opts);

    // fixtures -> cache -> remote; throws LabelSyntaxError, UnknownLabelError,
    // NetworkError
    CurveRecord fetch(const std::string& label);

    const Options& options() const { return opts_; }

  private:
    Options opts_;
    std::chrono::steady_clock::time_point last_request_{};
    bool fixtures_loaded_ = false;
    std::map<std::string, CurveRecord> fixtures_;
    void load_fixtures();
    std::string cache_path(const std::string& label) const;
};

} // namespace gtype

#endif
