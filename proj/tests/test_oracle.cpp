#include <doctest.h>

#include <algorithm>

#include "hypertri/oracle.hpp"
#include "hypertri/rng.hpp"
#include "support.hpp"

using namespace hypertri;

namespace {

Hypergraph graph(std::initializer_list<std::initializer_list<VertexId>> edges) {
    Hypergraph h;
    std::uint64_t idx = 0;
    for (const auto& e : edges)
        h.edges.push_back(make_hyperedge(++idx, std::vector<VertexId>(e)));
    return h;
}

}  // namespace

TEST_CASE("exact_count on the 3-edge instance") {
    const auto c = exact_count(graph({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}));
    CHECK(c.inner == 3);
    CHECK(c.hybrid == 4);
    CHECK(c.outer == 0);
    CHECK(c.ccc == 0);
    CHECK(c.tcc == 0);
    CHECK(c.ttc == 0);
    CHECK(c.ttt == 1);
}

TEST_CASE("exact_count on a single edge") {
    const auto c = exact_count(graph({{1, 2, 3}}));
    CHECK(c.inner == 1);
    CHECK(c.hybrid == 0);
    CHECK(c.outer == 0);
    CHECK(c.ccc + c.tcc + c.ttc + c.ttt == 0);
}

TEST_CASE("exact_count with an inclusion pair") {
    // Hybrid recomputed by the configuration enumerator: pair (e1,e2) shares
    // {2,3} with one exclusive vertex, the other pairs share a single vertex.
    const auto h = graph({{1, 2, 3}, {2, 3}, {3, 4}});
    CHECK(testing::enumerate_hybrid(h) == 1);

    const auto c = exact_count(h);
    CHECK(c.inner == 1);
    CHECK(c.hybrid == 1);
    CHECK(c.outer == 0);
    CHECK(c.ttc == 1);
    CHECK(c.ccc + c.tcc + c.ttt == 0);
}

TEST_CASE("exact_count matches configuration enumeration on random inputs") {
    Rng rng(99123);
    for (int iter = 0; iter < 100; ++iter) {
        const auto h = testing::random_hypergraph(rng, 12, 8, 1, 6);
        const auto c = exact_count(h);
        CHECK(c.inner == testing::enumerate_inner(h));
        CHECK(c.hybrid == testing::enumerate_hybrid(h));
        CHECK(c.outer == testing::enumerate_outer(h));

        std::uint64_t ccc, tcc, ttc, ttt;
        testing::enumerate_classes(h, ccc, tcc, ttc, ttt);
        CHECK(c.ccc == ccc);
        CHECK(c.tcc == tcc);
        CHECK(c.ttc == ttc);
        CHECK(c.ttt == ttt);

        // Class counts partition the pairwise-intersecting triples.
        std::uint64_t triples = 0;
        const std::size_t n = h.edges.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    if (intersection_size(h.edges[i], h.edges[j]) > 0 &&
                        intersection_size(h.edges[i], h.edges[k]) > 0 &&
                        intersection_size(h.edges[j], h.edges[k]) > 0)
                        ++triples;
        CHECK(c.ccc + c.tcc + c.ttc + c.ttt == triples);
    }
}

TEST_CASE("exact_count is invariant under arrival permutation") {
    Rng rng(5150);
    for (int iter = 0; iter < 30; ++iter) {
        auto h = testing::random_hypergraph(rng, 10, 8, 1, 5);
        const auto before = exact_count(h);
        // Deterministic shuffle.
        for (std::size_t i = h.edges.size(); i > 1; --i)
            std::swap(h.edges[i - 1], h.edges[rng.uniform_index(i)]);
        for (std::size_t i = 0; i < h.edges.size(); ++i)
            h.edges[i].arrival_index = i + 1;
        const auto after = exact_count(h);
        CHECK(before.inner == after.inner);
        CHECK(before.hybrid == after.hybrid);
        CHECK(before.outer == after.outer);
        CHECK(before.ccc == after.ccc);
        CHECK(before.tcc == after.tcc);
        CHECK(before.ttc == after.ttc);
        CHECK(before.ttt == after.ttt);
    }
}

TEST_CASE("exact_count rejects inputs over the edge cap") {
    Hypergraph h;
    for (std::uint64_t i = 0; i < 11; ++i)
        h.edges.push_back(make_hyperedge(i + 1, {VertexId(i), VertexId(i + 1)}));
    CHECK_THROWS_AS(exact_count(h, 10), std::invalid_argument);
    CHECK_NOTHROW(exact_count(h, 11));
}
