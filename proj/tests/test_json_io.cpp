#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confchi/combinatorics.hpp"
#include "confchi/errors.hpp"
#include "confchi/formulas.hpp"
#include "confchi/json_io.hpp"

#include "corpus.hpp"
#include "helpers.hpp"

using namespace confchi;
using nlohmann::json;
using confchi::testing::Rng;
using confchi::testing::random_series;
using confchi::testing::series_of;

TEST_CASE("series serialization") {
    const EgfSeries s = series_of({1, 1, 3, -5});
    const json j = series_to_json(s);
    CHECK(j["order"] == 3);
    CHECK(j["coeffs"] == json::array({"1", "1", "3", "-5"}));
    CHECK(series_from_json(j) == s);

    // Fractions keep exact form.
    const EgfSeries half(std::vector<Rational>{Rational(1), Rational(1) / 2});
    CHECK(series_to_json(half)["coeffs"][1] == "1/2");
}

TEST_CASE("series round-trips, including random fractional series") {
    Rng rng(521);
    for (int i = 0; i < 100; ++i) {
        const EgfSeries s = random_series(rng, static_cast<int>(rng.range(0, 9)));
        CHECK(series_from_json(series_to_json(s)) == s);
    }
}

TEST_CASE("series schema violations") {
    CHECK_THROWS_AS(series_from_json(json{{"coeffs", json::array({"1"})}}), ParseError);
    CHECK_THROWS_AS(series_from_json(json{{"order", 1}, {"coeffs", json::array({"1"})}}),
                    ParseError);
    CHECK_THROWS_AS(
        series_from_json(json{{"order", 0}, {"coeffs", json::array({1.5})}}), ParseError);
    CHECK_THROWS_AS(series_from_json(json{{"order", -1}, {"coeffs", json::array()}}),
                    ParseError);
    // Integer coefficients are accepted on input.
    CHECK(series_from_json(json{{"order", 1}, {"coeffs", json::array({1, -2})}}) ==
          series_of({1, -2}));
}

TEST_CASE("complex parsing") {
    const auto X = complex_from_json(json::parse(R"({"facets":[[1,2],[2,3],[1,3]]})"));
    CHECK(X.faces().size() == 6);
    CHECK(euler_char(X) == 0);

    const auto mixed = complex_from_json(json::parse(R"({"facets":[[2,"a",1]]})"));
    CHECK(mixed.faces().size() == 7);

    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"facets":[[1,1]]})")), ValidationError);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"facets":[]})")), ValidationError);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"facets":[[1.5]]})")), ParseError);
    CHECK_THROWS_AS(complex_from_json(json::parse(R"({"other":1})")), ParseError);
}

TEST_CASE("stratified space parsing") {
    const json two_planes = json::parse(R"({
        "strata": [
            {"name": "half_planes", "dim": 2, "chi_c": 4, "link_chi": 0},
            {"name": "line", "dim": 1, "chi_c": -1, "link_chi": 4}
        ]
    })");
    const StratifiedSpace space = space_from_json(two_planes);
    REQUIRE(space.strata.size() == 2);
    CHECK(space.strata[0].sheaf_rank == 1);  // constant sheaf by default
    CHECK(space.strata[1].link_chi == 4);
    CHECK(egf_corollary(space, 4) == series_of({1, 1, 3, -5, 16}));

    // Explicit sheaf data survives the round trip.
    const json with_sheaf = json::parse(
        R"({"strata":[{"name":"s","dim":0,"chi_c":2,"sheaf_rank":-3}]})");
    const StratifiedSpace parsed = space_from_json(with_sheaf);
    CHECK(parsed.strata[0].sheaf_rank == -3);
    CHECK(!parsed.strata[0].link_chi.has_value());
    CHECK(space_from_json(space_to_json(parsed)).strata[0].sheaf_rank == -3);

    CHECK_THROWS_AS(space_from_json(json::parse(R"({"strata":[{"dim":1,"chi_c":1}]})")),
                    ParseError);
    CHECK_THROWS_AS(
        space_from_json(json::parse(R"({"strata":[{"name":"s","chi_c":1}]})")), ParseError);
    CHECK_THROWS_AS(
        space_from_json(json::parse(R"({"strata":[{"name":"s","dim":1,"chi_c":0.5}]})")),
        ParseError);
}

TEST_CASE("equivariant serialization") {
    const EquivariantChar ec = equivariant_character(6, 2);
    const json j = equivariant_to_json(ec);
    CHECK(j["n"] == 2);
    CHECK(j["multiplicity"] == 3);
    CHECK(j["character"]["[1,1]"] == 6);
    CHECK(j["character"]["[2]"] == 0);

    // Values past int64 come out as exact decimal strings.
    const BigInt huge = BigInt("123456789012345678901234567890") * factorial(3);
    const json big = equivariant_to_json(equivariant_character(huge, 3));
    CHECK(big["character"]["[1,1,1]"].is_string());
    CHECK(big["character"]["[1,1,1]"] == huge.str());
}
