#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <leafcon/graph6.hpp>

using namespace leafcon;

TEST_CASE("known encodings") {
    CHECK(graph6_encode(Graph::complete(1)) == "@");
    CHECK(graph6_encode(Graph::complete(2)) == "A_");
    CHECK(graph6_encode(Graph::empty(2)) == "A?");
    CHECK(graph6_encode(Graph::complete(5)) == "D~{");
    CHECK(graph6_encode(Graph::empty(0)) == "?");

    CHECK(graph6_decode("@") == Graph::complete(1));
    CHECK(graph6_decode("A_") == Graph::complete(2));
    CHECK(graph6_decode("D~{") == Graph::complete(5));
    CHECK(graph6_decode("?") == Graph::empty(0));
}

TEST_CASE("round trips for structured graphs") {
    for (int n = 1; n <= 40; ++n) {
        CHECK(graph6_decode(graph6_encode(Graph::path(n))) == Graph::path(n));
        CHECK(graph6_decode(graph6_encode(Graph::complete(n))) == Graph::complete(n));
    }
    const Graph b = Graph::complete_bipartite(7, 9);
    CHECK(graph6_decode(graph6_encode(b)) == b);
}

TEST_CASE("long form starts at 63 vertices") {
    const Graph g = Graph::empty(63);
    const std::string s = graph6_encode(g);
    REQUIRE(s.size() >= 4);
    CHECK(s.substr(0, 4) == "~??~");
    CHECK(graph6_decode(s) == g);

    const Graph p = Graph::path(70);
    CHECK(graph6_decode(graph6_encode(p)) == p);
}

TEST_CASE("malformed inputs carry byte offsets") {
    CHECK_THROWS_AS(graph6_decode(""), parse_error);
    try {
        graph6_decode("");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 0);
    }

    // Byte outside the printable graph6 alphabet.
    try {
        graph6_decode("B \x20");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 1);
    }

    // Truncated edge data: K_5 needs two payload bytes.
    CHECK_THROWS_AS(graph6_decode("D~"), parse_error);
    // Trailing junk after a complete graph body.
    CHECK_THROWS_AS(graph6_decode("@@"), parse_error);
    // Nonzero padding bits in the final byte.
    CHECK_THROWS_AS(graph6_decode("AO"), parse_error);
    // Long-form header that is cut short.
    CHECK_THROWS_AS(graph6_decode("~?"), parse_error);
    // Long form used for an order that fits the short form.
    CHECK_THROWS_AS(graph6_decode("~??@"), parse_error);
}

TEST_CASE("capability limits are distinct from parse failures") {
    CHECK_THROWS_AS(graph6_decode("~~??????"), capability_error);
    CHECK_THROWS_AS(graph6_decode("~@MG"), capability_error);
}

TEST_CASE("padding is strict zero") {
    // n=2 uses one data bit; set a padding bit below it.
    CHECK_THROWS_AS(graph6_decode("AO"), parse_error);
    CHECK(graph6_decode("A?") == Graph::empty(2));
}
