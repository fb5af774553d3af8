#include "gtype/curvedb.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include <httplib.h>

namespace gtype {

EllipticCurve CurveRecord::curve() const { return curve_from_coeffs(coefficients); }

nlohmann::ordered_json CurveRecord::to_json() const {
    nlohmann::ordered_json j;
    j["label"] = label;
    auto arr = nlohmann::ordered_json::array();
    for (const Rational& c : coefficients) arr.push_back(c.str());
    j["coefficients"] = arr;
    j["source"] = source;
    return j;
}

CurveRecord CurveRecord::from_json(const nlohmann::json& j) {
    CurveRecord r;
    r.label = j.at("label").get<std::string>();
    for (const auto& c : j.at("coefficients"))
        r.coefficients.push_back(Rational::from_string(c.get<std::string>()));
    if (r.coefficients.size() != 5)
        throw std::invalid_argument("CurveRecord: expected five coefficients");
    if (j.contains("source")) r.source = j["source"].get<std::string>();
    return r;
}

bool valid_label(const std::string& label) {
    // conductor digits, isogeny-class letters, optional curve index, and an
    // optional -class/-cm suffix used by bundled representatives
    size_t i = 0;
    if (i >= label.size() || !std::isdigit(static_cast<unsigned char>(label[i]))) return false;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    if (i >= label.size() || !std::islower(static_cast<unsigned char>(label[i]))) return false;
    while (i < label.size() && std::islower(static_cast<unsigned char>(label[i]))) ++i;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    if (i == label.size()) return true;
    std::string rest = label.substr(i);
    return rest == "-class" || rest == "-cm";
}

CurveDb::Options CurveDb::from_env() {
    Options o;
    if (const char* v = std::getenv("GTYPE_FIXTURES")) o.fixtures_path = v;
    if (const char* v = std::getenv("GTYPE_CACHE_DIR")) o.cache_dir = v;
    if (const char* v = std::getenv("GTYPE_DB_URL")) o.base_url = v;
    if (const char* v = std::getenv("GTYPE_OFFLINE")) o.offline = std::string(v) == "1";
    if (const char* v = std::getenv("GTYPE_RATE_MS")) o.min_request_interval_ms = std::strtoul(v, nullptr, 10);
    if (o.fixtures_path.empty()) {
        for (const char* cand : {"fixtures/curves.json", "../fixtures/curves.json",
                                 "../../fixtures/curves.json"})
            if (std::filesystem::exists(cand)) { o.fixtures_path = cand; break; }
    }
#ifdef GTYPE_FIXTURES_DEFAULT
    if (o.fixtures_path.empty() && std::filesystem::exists(GTYPE_FIXTURES_DEFAULT))
        o.fixtures_path = GTYPE_FIXTURES_DEFAULT;
#endif
    if (o.cache_dir.empty()) o.cache_dir = "gtype-cache";
    return o;
}

CurveDb::CurveDb(Options opts) : opts_(std::move(opts)) {}

void CurveDb::load_fixtures() {
    if (fixtures_loaded_) return;
    fixtures_loaded_ = true;
    if (opts_.fixtures_path.empty()) return;
    std::ifstream in(opts_.fixtures_path);
    if (!in) return;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, true, true);
    for (const auto& rec : doc.at("curves")) {
        CurveRecord r = CurveRecord::from_json(rec);
        r.source = "inline";
        fixtures_[r.label] = std::move(r);
    }
}

std::string CurveDb::cache_path(const std::string& label) const {
    return opts_.cache_dir + "/" + label + ".json";
}

CurveRecord CurveDb::fetch(const std::string& label) {
    if (!valid_label(label)) throw LabelSyntaxError("bad curve label: " + label);
    load_fixtures();
    auto it = fixtures_.find(label);
    if (it != fixtures_.end()) return it->second;

    // disk cache
    std::string path = cache_path(label);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        nlohmann::json doc = nlohmann::json::parse(in);
        CurveRecord r = CurveRecord::from_json(doc);
        r.source = "cache";
        return r;
    }

    if (opts_.offline || opts_.base_url.empty())
        throw UnknownLabelError("label " + label + " not in fixtures or cache (offline)");

    // remote fetch: GET {base}/curve/{label}, honoring the request rate
    if (opts_.min_request_interval_ms > 0) {
        auto now = std::chrono::steady_clock::now();
        auto since = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_request_);
        if (since.count() < static_cast<long long>(opts_.min_request_interval_ms))
            std::this_thread::sleep_for(
                std::chrono::milliseconds(opts_.min_request_interval_ms) - since);
    }
    last_request_ = std::chrono::steady_clock::now();
    std::string host = opts_.base_url;
    httplib::Client client(host);
    client.set_connection_timeout(10);
    client.set_read_timeout(10);
    auto res = client.Get(("/curve/" + label).c_str());
    if (!res) throw NetworkError("fetch failed for " + label + ": no response from " + host);
    if (res->status == 404) throw UnknownLabelError("remote database has no curve " + label);
    if (res->status != 200)
        throw NetworkError("fetch failed for " + label + ": HTTP " + std::to_string(res->status));
    CurveRecord r;
    try {
        r = CurveRecord::from_json(nlohmann::json::parse(res->body));
    } catch (const std::exception& e) {
        throw NetworkError(std::string("malformed response for ") + label + ": " + e.what());
    }
    r.source = "remote";

    // cache on disk keyed by label
    std::error_code ec;
    std::filesystem::create_directories(opts_.cache_dir, ec);
    std::ofstream out(path);
    if (out) out << r.to_json().dump(2) << "\n";
    return r;
}

} // namespace gtype
