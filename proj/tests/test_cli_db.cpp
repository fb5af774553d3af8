#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <thread>

#include <httplib.h>

#include "gtype/curvedb.hpp"

using namespace gtype;

namespace {

CurveDb::Options base_options() {
    CurveDb::Options o = CurveDb::from_env();
    o.cache_dir = (std::filesystem::temp_directory_path() / "gtype-test-cache").string();
    std::filesystem::remove_all(o.cache_dir);
    o.offline = true;
    o.base_url = "";
    return o;
}

} // namespace

TEST_CASE("label validation") {
    CHECK(valid_label("11a1"));
    CHECK(valid_label("1922c1-class"));
    CHECK(valid_label("49a1-cm"));
    CHECK_FALSE(valid_label("badlabel!"));
    CHECK_FALSE(valid_label("a11"));
    CHECK_FALSE(valid_label(""));
    CHECK_FALSE(valid_label("11a1-classy"));
}

TEST_CASE("fixtures resolve inline") {
    CurveDb db(base_options());
    CurveRecord r = db.fetch("11a1");
    CHECK(r.source == "inline");
    CHECK(r.coefficients.size() == 5);
    CHECK(rational_torsion(r.curve()) == TorsionStructure(1, 5));
    // j of the CM fixture is recomputed locally
    CurveRecord cm = db.fetch("49a1");
    CHECK(j_invariant(cm.curve()) == Rational(-3375));
}

TEST_CASE("syntax and offline errors") {
    CurveDb db(base_options());
    CHECK_THROWS_AS(db.fetch("badlabel!"), LabelSyntaxError);
    CHECK_THROWS_AS(db.fetch("99999z9"), UnknownLabelError);
}

TEST_CASE("remote fetch, cache round trip, and error kinds") {
    httplib::Server server;
    server.Get("/curve/999a1", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"label":"999a1","coefficients":["0","0","0","1","1"]})", "application/json");
    });
    server.Get("/curve/998a1", [](const httplib::Request&, httplib::Response& res) {
        res.set_content("this is not json", "application/json");
    });
    int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    CurveDb::Options o = base_options();
    o.offline = false;
    o.base_url = "http://127.0.0.1:" + std::to_string(port);

    {
        CurveDb db(o);
        CurveRecord r = db.fetch("999a1");
        CHECK(r.source == "remote");
        CHECK(r.curve().a6 == Rational(1));
        // malformed body surfaces as a network error
        CHECK_THROWS_AS(db.fetch("998a1"), NetworkError);
        // unknown label on the remote side
        CHECK_THROWS_AS(db.fetch("997a1"), UnknownLabelError);
    }

    server.stop();
    worker.join();

    // offline now, the cached record resolves identically
    o.offline = true;
    CurveDb db2(o);
    CurveRecord cached = db2.fetch("999a1");
    CHECK(cached.source == "cache");
    CHECK(cached.coefficients == std::vector<Rational>{Rational(0), Rational(0), Rational(0),
                                                       Rational(1), Rational(1)});

    // with the server gone and a cold cache, fetching is a network error
    std::filesystem::remove_all(o.cache_dir);
    o.offline = false;
    CurveDb db3(o);
    CHECK_THROWS_AS(db3.fetch("999a1"), NetworkError);
}
