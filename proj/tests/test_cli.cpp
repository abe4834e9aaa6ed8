#include <doctest.h>

#include "nch/run.hpp"

#include <cstdlib>

using namespace nch;

namespace {

RunConfig cfg(const std::string& command) {
    RunConfig c;
    c.command = command;
    return c;
}

std::vector<int> degree_dims(const Json& res) {
    std::vector<int> out;
    for (const auto& d : res["degrees"]) out.push_back(d["dim"].get<int>());
    return out;
}

}  // namespace

TEST_CASE("homology --algebra C --theory hc --max-degree 6") {
    auto c = cfg("homology");
    c.max_degree = 6;
    auto r = run(c);
    CHECK(degree_dims(r.results[0]) == std::vector<int>{1, 0, 1, 0, 1, 0, 1});
    CHECK(exit_status(r) == 0);
}

TEST_CASE("verify --suite operators --algebra dual --N 6") {
    auto c = cfg("verify");
    c.suite = "operators";
    c.algebra = "dual";
    c.N = 6;
    auto r = run(c);
    CHECK_FALSE(r.assertions.empty());
    CHECK(exit_status(r) == 0);
}

TEST_CASE("toeplitz --symbol z --N 1..12") {
    auto c = cfg("toeplitz");
    c.symbol = "z";
    c.n_range = "1..12";
    auto r = run(c);
    const auto& res = r.results[0];
    CHECK(res["winding"].get<int>() == 1);
    CHECK(res["stabilized"].get<bool>());
    CHECK(res["index"].get<std::string>() == "-1");
    CHECK(res["per_N"].size() == 12);
    CHECK(exit_status(r) == 0);
}

TEST_CASE("json report has the stable schema and round-trips") {
    auto c = cfg("verify");
    c.suite = "sbi";
    c.algebra = "dual";
    auto r = run(c);
    auto text = emit(r, "json");
    auto j = Json::parse(text);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "config", "results", "assertions"});
    for (const auto& a : j["assertions"]) {
        CHECK(a.contains("name"));
        CHECK(a.contains("pass"));
        CHECK(a.contains("detail"));
    }
    CHECK(j.dump(2) + "\n" == text);
}

TEST_CASE("output is byte-identical for the same seed") {
    auto c = cfg("verify");
    c.suite = "cochains";
    c.algebra = "dual";
    c.seed = 42;
    CHECK(emit(run(c), "json") == emit(run(c), "json"));
    auto t = emit(run(c), "table");
    CHECK(t.find("seed: 42") != std::string::npos);
}

TEST_CASE("table output aligns homology dims per degree") {
    auto c = cfg("homology");
    c.max_degree = 2;
    auto t = emit(run(c), "table");
    CHECK(t.find("  degree  dim  trusted\n") != std::string::npos);
    CHECK(t.find("       1    0  yes\n") != std::string::npos);
}

TEST_CASE("failing assertion carries the first offending basis tuple") {
    auto c = cfg("describe");
    c.algebra = std::string(NCH_TEST_DATA) + "/nonassoc.json";
    auto r = run(c);
    CHECK(exit_status(r) == 1);
    bool found = false;
    for (const auto& a : r.assertions)
        if (!a.pass && a.detail.find("(0,0,0)") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("negative control: square-zero excision exits 1") {
    auto c = cfg("verify");
    c.suite = "excision";
    c.extension = "square_zero";
    CHECK(exit_status(run(c)) == 1);
}

TEST_CASE("configuration and input errors are parse errors") {
    auto c = cfg("homology");
    c.max_degree = 6;
    c.N = 5;
    CHECK_THROWS_AS(run(c), ParseError);
    auto d = cfg("homology");
    d.algebra = "no_such_algebra";
    CHECK_THROWS_AS(run(d), ParseError);
    auto e = cfg("verify");
    e.suite = "nope";
    CHECK_THROWS_AS(run(e), ParseError);
    auto f = cfg("toeplitz");
    f.symbol = "z^";
    CHECK_THROWS_AS(run(f), ParseError);
}

TEST_CASE("resource cap") {
    setenv("NCH_MAX_DIM", "100", 1);
    auto c = cfg("homology");
    c.algebra = "M2";
    c.theory = "hh";
    c.max_degree = 4;
    CHECK_THROWS_AS(run(c), ResourceCapExceeded);
    unsetenv("NCH_MAX_DIM");
}

TEST_CASE("gaussian algebra file") {
    auto c = cfg("homology");
    c.algebra = std::string(NCH_TEST_DATA) + "/gauss_split.json";
    c.max_degree = 4;
    CHECK(degree_dims(run(c).results[0]) == std::vector<int>{2, 0, 2, 0, 2});
}
