#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "bowtie/bowtie.hpp"

using namespace bowtie;

namespace {

LinearRGraph parse(const std::string& text) {
    std::istringstream in(text);
    return read_lhg(in);
}

long error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST_CASE("read_lhg parses a well-formed file", "[io]") {
    LinearRGraph g = parse(
        "3 7 7\n"
        "0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n");
    REQUIRE(g.r() == 3);
    REQUIRE(g.n() == 7);
    REQUIRE(g.m() == 7);
    REQUIRE(is_complete(g));

    SECTION("trailing garbage after the last edge is rejected") {
        REQUIRE_THROWS_AS(parse("3 7 1\n0 1 2\nleftover\n"), ParseError);
    }
}

TEST_CASE("read_lhg reports the offending line", "[io]") {
    // Header problems are reported on the header line.
    REQUIRE(error_line("3 7\n") == 1);
    REQUIRE(error_line("x 7 7\n") == 1);
    REQUIRE(error_line("3 7 7 9\n") == 1);

    // Edge-line problems carry that line's number.
    REQUIRE(error_line("3 7 2\n0 1 2\n0 3\n") == 3);
    REQUIRE(error_line("3 7 2\n0 1 2\n0 3 x\n") == 3);
    REQUIRE(error_line("3 7 2\n0 1 2\n0 3 4 5\n") == 3);

    // Missing edges are reported at end of file.
    REQUIRE(error_line("3 7 3\n0 1 2\n0 3 4\n") > 0);

    // Structural violations point at the edge that completed them.
    REQUIRE(error_line("3 7 2\n0 1 2\n0 1 3\n") == 3);   // linearity
    REQUIRE(error_line("3 7 2\n0 1 2\n0 3 9\n") == 3);   // vertex out of range
}

TEST_CASE("lhg round trip preserves the graph", "[io]") {
    LinearRGraph g = make_fano();
    std::ostringstream out;
    write_lhg(out, g);
    LinearRGraph back = parse(out.str());
    REQUIRE(back.r() == g.r());
    REQUIRE(back.n() == g.n());
    REQUIRE(back.edges() == g.edges());
}

TEST_CASE("colour files round trip and validate", "[io]") {
    std::vector<int> values{0, 1, 1, 0, 2, 1, 0};
    std::ostringstream out;
    write_colour_values(out, values);
    std::istringstream in(out.str());
    REQUIRE(read_colour_values(in) == values);

    std::istringstream bad("0\n1\nx\n");
    REQUIRE_THROWS_AS(read_colour_values(bad), ParseError);
    std::istringstream negative("0\n-2\n");
    REQUIRE_THROWS_AS(read_colour_values(negative), ParseError);
}

TEST_CASE("make_colouring validates values against the graph", "[io]") {
    LinearRGraph g = make_fano();
    REQUIRE_THROWS_AS(make_colouring(g, 2, {0, 1, 0}), BadColourFileError);
    REQUIRE_THROWS_AS(make_colouring(g, 2, {0, 1, 0, 1, 0, 1, 2}), BadColourFileError);
    Colouring c = make_colouring(g, 2, {0, 1, 0, 1, 0, 1, 0});
    REQUIRE(c.c == 2);
    REQUIRE(c.colour_of(1) == 1);
}
