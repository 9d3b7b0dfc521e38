#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "ccd/csv.hpp"
#include "ccd/error.hpp"

using namespace ccd;

TEST_CASE("csv parses quoted fields, CRLF and a BOM", "[csv]") {
    const auto t = csv::parse("\xEF\xBB\xBFid,name\r\na,\"x, \"\"y\"\"\"\r\n\r\nb,\"two\nlines\"\n", "mem.csv");
    REQUIRE(t.header == std::vector<std::string>{"id", "name"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].fields[1] == "x, \"y\"");
    CHECK(t.rows[0].line == 2);
    CHECK(t.rows[1].fields[1] == "two\nlines");
    CHECK(t.rows[1].line == 4);
    CHECK(t.where(t.rows[1]) == "mem.csv:4");
}

TEST_CASE("csv keeps a trailing empty field", "[csv]") {
    const auto t = csv::parse("a,b\n1,\n", "mem");
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].fields == std::vector<std::string>{"1", ""});
}

TEST_CASE("csv rejects ragged rows and unterminated quotes", "[csv][errors]") {
    try {
        csv::parse("a,b\n1,2\n3\n", "ragged.csv");
        FAIL("no exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadField);
        CHECK(e.location() == "ragged.csv:3");
    }
    CHECK_THROWS_AS(csv::parse("a\n\"open\n", "q"), Error);
    try {
        csv::parse("", "empty.csv");
        FAIL("no exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadHeader);
    }
}

TEST_CASE("csv header check names the expected columns", "[csv][errors]") {
    const auto t = csv::parse("x,y\n", "h.csv");
    CHECK_NOTHROW(csv::require_header(t, {"x", "y"}));
    try {
        csv::require_header(t, {"x", "z"});
        FAIL("no exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadHeader);
        CHECK(std::string(e.what()).find("x,z") != std::string::npos);
    }
}

TEST_CASE("csv number parsing is strict", "[csv]") {
    CHECK(csv::parse_double("1.5") == 1.5);
    CHECK(csv::parse_double("+2") == 2.0);
    CHECK(csv::parse_double("-3e2") == -300.0);
    CHECK_FALSE(csv::parse_double(""));
    CHECK_FALSE(csv::parse_double("1.5x"));
    CHECK_FALSE(csv::parse_double(" 1"));
    CHECK(std::isnan(*csv::parse_double("nan")));
    CHECK(csv::parse_int("2021") == 2021);
    CHECK_FALSE(csv::parse_int("2021.0"));
}

TEST_CASE("csv double formatting round-trips", "[csv][property]") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> exponent(-30.0, 30.0);
    for (int k = 0; k < 2000; ++k) {
        const double v = (k % 2 ? -1.0 : 1.0) * std::pow(10.0, exponent(rng));
        CHECK(csv::parse_double(csv::format_double(v)) == v);
    }
    CHECK(csv::format_double(-0.0) == "0");
    CHECK(csv::format_double(0.25) == "0.25");
}

TEST_CASE("csv writer escapes and the parser reads it back", "[csv]") {
    std::ostringstream out;
    csv::write_row(out, {"h1", "h2"});
    csv::write_row(out, {"plain", "with,comma \"q\""});
    CHECK(out.str() == "h1,h2\nplain,\"with,comma \"\"q\"\"\"\n");
    const auto t = csv::parse(out.str(), "rt");
    CHECK(t.rows.at(0).fields[1] == "with,comma \"q\"");
}
