#include <doctest.h>

#include "cellmap/enumerate.hpp"
#include "cellmap/formats.hpp"
#include "test_util.hpp"

using namespace cellmap;
using cellmap::test::contains;
using cellmap::test::message_of;

TEST_CASE("cycle notation is whitespace-insensitive and round-trips") {
    LabelSet set = LabelSet::unicellular(2);
    Permutation tight = parse_cycles("(L,3,2,1,4)(R)", set);
    Permutation spaced = parse_cycles("  ( L , 3 ,2, 1,4 )\t(R) ", set);
    CHECK(tight == spaced);
    CHECK(format_cycles(tight) == "(L,3,2,1,4)(R)");
    CHECK(parse_cycles(format_cycles(tight), set) == tight);

    // unmentioned labels are fixed points
    Permutation partial = parse_cycles("(1,2)", set);
    CHECK(partial.apply(L) == L);
    CHECK(partial.apply(Label::plain(1)) == Label::plain(2));
}

TEST_CASE("cycle notation errors carry positions") {
    LabelSet set = LabelSet::unicellular(2);
    try {
        parse_cycles("(1,xy)", set, 3, 1);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 4);
        CHECK(contains(e.what(), "unrecognized label"));
    }
    CHECK(contains(message_of<ParseError>([&] { parse_cycles("(1,9)", set); }),
                   "not in the label set"));
    CHECK(contains(message_of<ParseError>([&] { parse_cycles("(1,2)(2,3)", set); }),
                   "more than one cycle"));
    CHECK(contains(message_of<ParseError>([&] { parse_cycles("(1,2", set); }),
                   "unterminated"));
    CHECK(contains(message_of<ParseError>([&] { parse_cycles("1,2)", set); }),
                   "expected '('"));
}

TEST_CASE("map records round-trip byte for byte") {
    for (int n = 0; n <= 3; ++n) {
        enumerate_unicellular(n, std::nullopt, [&](const UnicellularMap& u) {
            std::string text = write_map_record(u);
            AnyMap parsed = parse_map_record(text);
            REQUIRE(std::holds_alternative<UnicellularMap>(parsed));
            CHECK(std::get<UnicellularMap>(parsed) == u);
            CHECK(write_map_record(parsed) == text);
        });
        if (n >= 1) {
            enumerate_bicellular(n, std::nullopt, [&](const BicellularMap& b) {
                std::string text = write_map_record(b);
                AnyMap parsed = parse_map_record(text);
                REQUIRE(std::holds_alternative<BicellularMap>(parsed));
                CHECK(std::get<BicellularMap>(parsed) == b);
                CHECK(write_map_record(parsed) == text);
            });
        }
    }
}

TEST_CASE("alpha rainbow cycles may be omitted, sigma is optional") {
    AnyMap m = parse_map_record("type unicellular\nedges 2\nalpha (1,3)(2,4)\n");
    REQUIRE(std::holds_alternative<UnicellularMap>(m));
    CHECK(std::get<UnicellularMap>(m) == make_unicellular(2, {{1, 3}, {2, 4}}));

    AnyMap full = parse_map_record(
        "type unicellular\nedges 2\nalpha (L,R)(1,3)(2,4)\nsigma (L,3,2,1,4)(R)\n");
    CHECK(std::get<UnicellularMap>(full) == std::get<UnicellularMap>(m));

    AnyMap bi = parse_map_record("type bicellular\nedges 2\nm 2\nalpha (1,3)(2,4)\n");
    REQUIRE(std::holds_alternative<BicellularMap>(bi));
    CHECK(std::get<BicellularMap>(bi) == make_bicellular(2, 2, {{1, 3}, {2, 4}}));
}

TEST_CASE("map record rejects inconsistent sigma") {
    std::string bad =
        "type unicellular\nedges 2\nalpha (1,3)(2,4)\nsigma (L,1,2,3,4)(R)\n";
    CHECK(contains(message_of<ParseError>([&] { parse_map_record(bad); }),
                   "canonical face"));
}

TEST_CASE("map record structural errors carry line numbers") {
    try {
        parse_map_record("type unicellular\nedges 2\nsigma (L)(R)\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(contains(e.what(), "expected 'alpha'"));
        CHECK(e.line == 3);
    }
    try {
        parse_map_record("type unicellular\nedges x\nalpha (1,2)\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(contains(e.what(), "integer"));
    }
    CHECK(contains(message_of<ParseError>([] {
                       parse_map_record("type triangular\nedges 1\nalpha (1,2)\n");
                   }),
                   "unicellular or bicellular"));
    CHECK(contains(message_of<ParseError>([] {
                       parse_map_record("type bicellular\nedges 2\nm 9\nalpha (1,3)(2,4)\n");
                   }),
                   "out of range"));
    CHECK(contains(message_of<ParseError>([] {
                       parse_map_record("type unicellular\nedges 1\nalpha (1,2)\nextra 3\n");
                   }),
                   "unexpected"));
    // alpha with a fixed point is reported at the alpha line
    try {
        parse_map_record("type unicellular\nedges 2\nalpha (1,2)\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(contains(e.what(), "fixed point"));
    }
}

TEST_CASE("record streams split on blank lines") {
    auto torus2 = make_unicellular(2, {{1, 3}, {2, 4}});
    auto arc = make_unicellular(1, {{1, 2}});
    std::string stream = write_map_record(torus2) + "\n" + write_map_record(arc);
    auto records = parse_map_records(stream);
    REQUIRE(records.size() == 2);
    CHECK(std::get<UnicellularMap>(records[0]) == torus2);
    CHECK(std::get<UnicellularMap>(records[1]) == arc);
}

TEST_CASE("diagram records round-trip") {
    Diagram d = make_interaction(4, 2, {{1, 3}, {2, 4}});
    std::string text = write_diagram(d);
    CHECK(text == "N 4\nbackbones 1..2 3..4\narcs (1,3) (2,4)\n");
    CHECK(parse_diagram(text) == d);

    Diagram one = make_diagram(4, {{1, 3}});
    CHECK(write_diagram(one) == "N 4\nbackbones 1..4\narcs (1,3)\n");
    CHECK(parse_diagram(write_diagram(one)) == one);

    Diagram empty = make_diagram(0, {});
    CHECK(write_diagram(empty) == "N 0\nbackbones 1..0\narcs\n");
    CHECK(parse_diagram(write_diagram(empty)) == empty);
}

TEST_CASE("diagram record errors") {
    CHECK(contains(message_of<ParseError>([] { parse_diagram("N 4\narcs (1,2)\n"); }),
                   "expected 'backbones'"));
    CHECK(contains(message_of<ParseError>(
                       [] { parse_diagram("N 4\nbackbones 2..4\narcs\n"); }),
                   "cover 1..N"));
    CHECK(contains(message_of<ParseError>(
                       [] { parse_diagram("N 4\nbackbones 1..2 4..4\narcs\n"); }),
                   "cover 1..N"));
    try {
        parse_diagram("N 4\nbackbones 1..4\narcs (1,5)\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(contains(e.what(), "out of range"));
    }
    CHECK(contains(message_of<ParseError>(
                       [] { parse_diagram("N 4\nbackbones 1..4\narcs (1 2)\n"); }),
                   "(i,j)"));
}

TEST_CASE("record kind detection") {
    CHECK(looks_like_diagram("N 4\nbackbones 1..4\narcs\n"));
    CHECK(looks_like_diagram("\n\nN 0\nbackbones 1..0\narcs\n"));
    CHECK_FALSE(looks_like_diagram("type unicellular\nedges 0\nalpha (L,R)\n"));
}
