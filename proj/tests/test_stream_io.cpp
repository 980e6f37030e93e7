#include <doctest.h>

#include <sstream>
#include <vector>

#include "hypertri/stream_io.hpp"

using namespace hypertri;

TEST_CASE("parse_stream reads edges, comments and blank lines") {
    std::istringstream in(
        "# header comment\n"
        "1 2 3\n"
        "\n"
        "4\t5\n"
        "# trailing comment\n"
        "6\n");
    ParseStats stats;
    const auto edges = parse_stream(in, &stats);

    REQUIRE(edges.size() == 3);
    CHECK(edges[0].vertices == std::vector<VertexId>{1, 2, 3});
    CHECK(edges[1].vertices == std::vector<VertexId>{4, 5});
    CHECK(edges[2].vertices == std::vector<VertexId>{6});
    CHECK(edges[0].arrival_index == 1);
    CHECK(edges[2].arrival_index == 3);
    CHECK(stats.edges == 3);
    CHECK(stats.duplicate_vertices == 0);
    CHECK(stats.bytes_read > 0);
}

TEST_CASE("duplicate vertices within a line are dropped and counted") {
    std::istringstream in("7 7 8 8 8\n");
    ParseStats stats;
    const auto edges = parse_stream(in, &stats);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].vertices == std::vector<VertexId>{7, 8});
    CHECK(stats.duplicate_vertices == 3);
}

TEST_CASE("vertices are sorted regardless of input order") {
    std::istringstream in("9 3 5 1\n");
    const auto edges = parse_stream(in);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].vertices == std::vector<VertexId>{1, 3, 5, 9});
}

TEST_CASE("CRLF line endings are accepted") {
    std::istringstream in("1 2\r\n3 4\r\n");
    const auto edges = parse_stream(in);
    REQUIRE(edges.size() == 2);
    CHECK(edges[1].vertices == std::vector<VertexId>{3, 4});
}

TEST_CASE("malformed tokens raise ParseError with the line number") {
    std::istringstream in("1 2\nfoo 3\n");
    try {
        parse_stream(in);
        FAIL("expected ParseError");
    } catch (const ParseError& err) {
        CHECK(err.line() == 2);
    }
}

TEST_CASE("for_each_hyperedge delivers edges in arrival order") {
    std::istringstream in("1 2\n3 4\n5 6\n");
    ParseStats stats;
    std::vector<std::uint64_t> order;
    for_each_hyperedge(
        in, [&](Hyperedge&& e) { order.push_back(e.arrival_index); }, stats);
    CHECK(order == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(stats.line_number == 3);
}

TEST_CASE("empty input yields no edges") {
    std::istringstream in("");
    ParseStats stats;
    CHECK(parse_stream(in, &stats).empty());
    CHECK(stats.edges == 0);
}
