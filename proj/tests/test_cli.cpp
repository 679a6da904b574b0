#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using namespace cpm;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args, std::optional<std::string> env = std::nullopt) {
    std::ostringstream o, e;
    int c = run_cli(args, o, e, env);
    return {c, o.str(), e.str()};
}

}  // namespace

TEST_CASE("complex literals") {
    CHECK(parse_complex("0.2+0.9i") == cplx(0.2, 0.9));
    CHECK(parse_complex("-1-2.5i") == cplx(-1, -2.5));
    CHECK(parse_complex("1.5i") == cplx(0, 1.5));
    CHECK(parse_complex("3") == cplx(3, 0));
    CHECK_FALSE(parse_complex("abc").has_value());
    CHECK_FALSE(parse_complex("1+2j").has_value());
}

TEST_CASE("group order") {
    auto r = run({"group", "order", "--N", "3"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["result"]["G_N"] == 108);
    CHECK(j["result"]["G_tilde_N"] == 2592);
    CHECK(j["overall"] == "pass");
    CHECK(j["version"] == kToolVersion);
}

TEST_CASE("resolve A at N = 3") {
    auto r = run({"resolve", "--N", "3", "--type", "A"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out)["result"];
    CHECK(j["curves"].size() == 2);
    CHECK(j["curves"][0]["self_intersection"] == -2);
    CHECK(j["curves"][1]["self_intersection"] == -2);
    CHECK(j["multiplicities"]["z1^N"]["E"] == json::array({2, 1}));
    CHECK(j["multiplicities"]["z2^N"]["E"] == json::array({1, 2}));
}

TEST_CASE("report schema") {
    auto j = nlohmann::ordered_json::parse(run({"lines", "orbits", "--N", "2"}).out);
    std::vector<std::string> keys;
    for (auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"version", "N", "suite", "checks", "overall", "result"});
    for (auto& c : j["checks"]) {
        CHECK(c.contains("check"));
        CHECK(c.contains("anchor"));
        CHECK(c.contains("witness"));
        CHECK(c["elapsed_ms"] == 0.0);
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"group", "order", "--N", "x"}).code == 2);
    CHECK(run({"resolve", "--type", "B"}).code == 2);
    CHECK(run({"all", "--N", "7"}).code == 2);
    CHECK(run({"theta", "verify", "--tau", "0.1+0.001i"}).code == 2);
    CHECK(run({"group", "order"}, "nonsense").code == 2);
}

TEST_CASE("tolerance precedence: --tol over CPM_TOL over default") {
    std::vector<std::string> a = {"theta", "verify", "--samples", "3"};
    CHECK(run(a).code == 0);
    CHECK(run(a, "1e-30").code == 1);
    auto b = a;
    b.insert(b.end(), {"--tol", "1e-9"});
    CHECK(run(b, "1e-30").code == 0);
    auto c = a;
    c.insert(c.end(), {"--tol", "1e-30"});
    CHECK(run(c).code == 1);
}

TEST_CASE("same seed, same bytes") {
    auto x = run({"all", "--N", "2", "--seed", "7", "--samples", "20"});
    auto y = run({"all", "--N", "2", "--seed", "7", "--samples", "20"});
    CHECK(x.code == 0);
    CHECK(x.out == y.out);
}
