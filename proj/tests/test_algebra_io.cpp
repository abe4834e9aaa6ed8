#include <doctest.h>

#include "common.hpp"

#include "nch/forms.hpp"
#include "nch/io.hpp"

using namespace nch;

TEST_CASE("built-in algebras are associative with unit at index 0") {
    for (const auto& name : builtin_names()) {
        auto a = builtin_algebra<Q>(name);
        CHECK_MESSAGE(validate(a).ok(), name);
        CHECK(a.unital() == (name != "strict_upper2"));
    }
}

TEST_CASE("reduced form dimensions are d (d-1)^n") {
    for (const auto& name : testing::five()) {
        auto a = builtin_algebra<Q>(name);
        FormComplex<Q> f(a, 4);
        long expect = a.dim();
        for (int n = 0; n <= 4; ++n) {
            CHECK(f.dim(n) == expect);
            expect *= a.dim() - 1;
        }
    }
}

TEST_CASE("algebra json round trip") {
    for (const auto& name : builtin_names()) {
        auto a = builtin_algebra<Q>(name);
        Json j = algebra_to_json(a);
        auto back = algebra_from_json(Json::parse(j.dump()), name);
        REQUIRE(back.is_rational());
        CHECK(back.q().structure() == a.structure());
        CHECK(back.q().labels() == a.labels());
        CHECK(back.q().unital() == a.unital());
    }
}

TEST_CASE("gaussian structure constants") {
    auto doc = Json::parse(R"({"name":"g","dim":2,"unital":true,"basis":["1","x"],
        "structure":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,1,"1/2+3/4i"]]})");
    auto la = algebra_from_json(doc);
    CHECK_FALSE(la.is_rational());
    REQUIRE(la.gaussian);
    CHECK(validate(*la.gaussian).ok());
    CHECK(la.gaussian->mul(1, 1).val[0] == QI(Q(1, 2), Q(3, 4)));
    CHECK_THROWS_AS(la.q(), ParseError);
}

TEST_CASE("malformed definitions are parse errors") {
    const char* bad[] = {
        R"({"dim":1,"unital":true,"structure":[[0,0,0,"1"]]})",
        R"({"name":"x","dim":1,"unital":true,"structure":[[0,0,1,"1"]]})",
        R"({"name":"x","dim":1,"unital":true,"structure":[[0,0,0,"one"]]})",
        R"({"name":"x","dim":1,"unital":true,"structure":[[0,0,0]]})",
        R"({"name":"x","dim":2,"unital":true,"basis":["a"],"structure":[]})",
        R"({"name":"x","dim":1,"unital":true,"structure":[[0,0,0,"1"]],"ideal":[3]})",
    };
    for (const char* s : bad) CHECK_THROWS_AS(algebra_from_json(Json::parse(s)), ParseError);
    CHECK_THROWS_AS(load_algebra("/nonexistent/file.json"), ParseError);
}

TEST_CASE("non-associative input is detected with its first triple") {
    auto la = algebra_from_json(Json::parse(
        R"({"name":"n","dim":2,"unital":false,"structure":[[0,0,1,"1"],[1,0,0,"1"]]})"));
    auto v = validate(la.q());
    REQUIRE_FALSE(v.associativity_defects.empty());
    // (x x) x = y x = x but x (x x) = x y = 0
    CHECK(v.associativity_defects[0] == std::array<int, 3>{0, 0, 0});
}

TEST_CASE("ideal field builds the extension") {
    auto la = load_algebra(std::string(NCH_TEST_DATA) + "/split_ideal.json");
    auto ext = extension_from(la);
    CHECK(ext.I.dim() == 4);
    CHECK(ext.A.dim() == 1);
    CHECK(ext.A.unital());
    SpMat<Q> zero = ext.projection * ext.inclusion;
    CHECK(is_zero(zero));
}

TEST_CASE("symbol syntax: string and json forms agree") {
    auto a = parse_symbol("z^-1 + 2 + 3z^2");
    auto b = parse_symbol(R"({"-1": "1", "0": "2", "2": "3"})");
    CHECK(a == b);
    CHECK(a.at(-1) == 1);
    CHECK(a.at(2) == 3);
    CHECK(parse_symbol(symbol_to_json(a).dump()) == a);
    CHECK_THROWS_AS(parse_symbol("z^"), ParseError);
    CHECK_THROWS_AS(parse_symbol(R"({"x": "1"})"), ParseError);
    CHECK(parse_range("1..12") == std::pair<int, int>{1, 12});
    CHECK(parse_range("7") == std::pair<int, int>{7, 7});
    CHECK_THROWS_AS(parse_range("5..2"), ParseError);
}
