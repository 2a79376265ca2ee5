#include <catch2/catch_amalgamated.hpp>

#include "fk/shape_io.hpp"

using namespace fk;

TEST_CASE("text format parses with row 0 on top") {
    Subgraph g = parse_text(".#.\n###\n.#.\n");
    CHECK(g.size() == 5);
    CHECK(g.contains(Cell{1, 1}));
    CHECK(g.contains(Cell{0, 1}));
    CHECK(g.contains(Cell{1, 2}));  // top row is the largest y
    CHECK(g.contains(Cell{1, 0}));
}

TEST_CASE("text emit is deterministic and round-trips") {
    Subgraph g = parse_text("##.\n.##\n");
    CHECK(emit_text(g) == "##.\n.##\n");
    CHECK(parse_text(emit_text(g)) == g);
}

TEST_CASE("text parse errors carry line and column") {
    try {
        parse_text("##\n#x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(parse_text("...\n...\n"), ParseError);
    CHECK_THROWS_AS(parse_text(""), ParseError);
}

TEST_CASE("json round-trip preserves absolute coordinates") {
    Subgraph g(std::vector<Cell>{{-2, 5}, {-1, 5}, {-2, 6}});
    Subgraph back = parse_json(emit_json(g));
    CHECK(back == g);
    CHECK(emit_json(g) == "{\"cells\":[[-2,5],[-1,5],[-2,6]]}");
}

TEST_CASE("json parse validation") {
    CHECK_THROWS_AS(parse_json("{\"cells\":[]}"), ParseError);
    CHECK_THROWS_AS(parse_json("{\"cells\":[[1]]}"), ParseError);
    CHECK_THROWS_AS(parse_json("{\"cells\":[[0.5,1]]}"), ParseError);
    CHECK_THROWS_AS(parse_json("nope"), ParseError);
    CHECK_THROWS_AS(parse_json("{}"), ParseError);
}

TEST_CASE("format sniffing") {
    CHECK(parse_shape("  {\"cells\":[[0,0]]}").size() == 1);
    CHECK(parse_shape("#\n").size() == 1);
    CHECK_THROWS_AS(parse_shape("   "), ParseError);
}
