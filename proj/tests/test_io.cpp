#include <doctest.h>

#include "capnash/io.hpp"

using namespace capnash;

TEST_CASE("graph text round trip") {
    CapacitatedGraph g(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 2, 2, 1});
    CapacitatedGraph back = parse_graph_text(write_graph_text(g));
    CHECK(back == g);
}

TEST_CASE("comments and blank lines are allowed anywhere") {
    const char* text =
        "# a comment\n"
        "capgraph 2 1\n"
        "\n"
        "k 0 1\n"
        "# mid-file note\n"
        "k 1 1\n"
        "e 0 1\n";
    CapacitatedGraph g = parse_graph_text(text);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parse errors name line numbers") {
    auto expect_error_line = [](const char* text, int line) {
        try {
            parse_graph_text(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line_number == line);
        }
    };
    expect_error_line("capgraph 1\n", 1);
    expect_error_line("capgraph 1 0\nk 0 1\nk 0 1\n", 3);             // duplicate k line
    expect_error_line("capgraph 2 1\nk 0 1\nk 1 1\ne 1 0\n", 4);      // u >= v
    expect_error_line("capgraph 2 1\nk 0 1\nk 1 1\ne 0 2\n", 4);      // out of range
    expect_error_line("capgraph 1 0\nk 0 1\nk 0 1\n", 3);             // extra line
    expect_error_line("capgraph 2 2\nk 0 1\nk 1 1\ne 0 1\ne 0 1\n", 5);  // parallel edge
}

TEST_CASE("empty graph serializes") {
    CapacitatedGraph g(0, {}, {});
    CHECK(parse_graph_text(write_graph_text(g)).vertex_count() == 0);
}
