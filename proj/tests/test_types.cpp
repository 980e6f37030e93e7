#include <doctest.h>

#include "hypertri/rng.hpp"
#include "hypertri/types.hpp"
#include "support.hpp"

using namespace hypertri;

namespace {

Hyperedge he(std::initializer_list<VertexId> vs) {
    return make_hyperedge(0, std::vector<VertexId>(vs));
}

}  // namespace

TEST_CASE("intersection_size on hand cases") {
    CHECK(intersection_size(he({1, 2, 3}), he({2, 3, 4})) == 2);
    CHECK(intersection_size(he({1, 2, 3}), he({1, 2, 3})) == 3);
    CHECK(intersection_size(he({1, 2}), he({3, 4})) == 0);
}

TEST_CASE("triple_intersection_size on hand cases") {
    CHECK(triple_intersection_size(he({1, 2, 3}), he({2, 3, 4}),
                                   he({3, 4, 5})) == 1);
    CHECK(triple_intersection_size(he({1, 2}), he({1, 2}), he({1, 2})) == 2);
    CHECK(triple_intersection_size(he({1, 2}), he({2, 3}), he({1, 3})) == 0);
}

TEST_CASE("classify_pair on hand cases") {
    auto p = classify_pair(he({1, 2, 3}), he({2, 3}));
    CHECK(p.kind == PairKind::Inclusion);
    CHECK(p.shared == 2);

    p = classify_pair(he({1, 2, 3}), he({3, 4}));
    CHECK(p.kind == PairKind::Intersection);
    CHECK(p.shared == 1);

    p = classify_pair(he({1, 2}), he({3, 4}));
    CHECK(p.kind == PairKind::Disjoint);
    CHECK(p.shared == 0);

    // Equal edges count as inclusion.
    CHECK(classify_pair(he({5, 6}), he({5, 6})).kind == PairKind::Inclusion);
}

TEST_CASE("binom3 hand values and brute-force equality up to 30") {
    CHECK(binom3(3) == 1);
    CHECK(binom3(15) == 455);
    CHECK(binom3(2) == 0);
    CHECK(binom3(0) == 0);
    for (std::uint64_t n = 0; n <= 30; ++n) {
        std::uint64_t brute = 0;
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = a + 1; b < n; ++b)
                for (std::uint64_t c = b + 1; c < n; ++c) ++brute;
        CHECK(binom3(n) == brute);
    }
}

TEST_CASE("make_hyperedge sorts, dedups and reports drops") {
    std::size_t dropped = 0;
    const Hyperedge e = make_hyperedge(7, {5, 5, 6}, &dropped);
    CHECK(e.arrival_index == 7);
    CHECK(e.vertices == std::vector<VertexId>{5, 6});
    CHECK(dropped == 1);
}

TEST_CASE("intersection properties on random edges") {
    Rng rng(20240817);
    for (int iter = 0; iter < 300; ++iter) {
        const auto h = testing::random_hypergraph(rng, 3, 12, 1, 6);
        const Hyperedge& a = h.edges[0];
        const Hyperedge& b = h.edges[h.edges.size() > 1 ? 1 : 0];
        const Hyperedge& c = h.edges.back();

        CHECK(intersection_size(a, b) == intersection_size(b, a));
        CHECK(intersection_size(a, a) == a.size());

        const auto i3 = triple_intersection_size(a, b, c);
        CHECK(i3 <= intersection_size(a, b));
        CHECK(i3 <= intersection_size(a, c));
        CHECK(i3 <= intersection_size(b, c));

        // Inclusion implies an explicit subset relation.
        if (classify_pair(a, b).kind == PairKind::Inclusion) {
            const Hyperedge& small = a.size() <= b.size() ? a : b;
            const Hyperedge& big = a.size() <= b.size() ? b : a;
            for (VertexId v : small.vertices)
                CHECK(testing::contains(big, v));
        }
    }
}
