#include "hypertri/types.hpp"

#include <algorithm>

namespace hypertri {

Hyperedge make_hyperedge(std::uint64_t arrival_index,
                         std::vector<VertexId> vertices,
                         std::size_t* dropped) {
    std::sort(vertices.begin(), vertices.end());
    const auto last = std::unique(vertices.begin(), vertices.end());
    if (dropped)
        *dropped = static_cast<std::size_t>(vertices.end() - last);
    vertices.erase(last, vertices.end());
    return Hyperedge{arrival_index, std::move(vertices)};
}

std::uint32_t intersection_size(const Hyperedge& a, const Hyperedge& b) {
    std::uint32_t count = 0;
    auto ia = a.vertices.begin();
    auto ib = b.vertices.begin();
    while (ia != a.vertices.end() && ib != b.vertices.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

std::uint32_t triple_intersection_size(const Hyperedge& a, const Hyperedge& b,
                                       const Hyperedge& c) {
    std::uint32_t count = 0;
    auto ia = a.vertices.begin();
    auto ib = b.vertices.begin();
    auto ic = c.vertices.begin();
    while (ia != a.vertices.end() && ib != b.vertices.end() &&
           ic != c.vertices.end()) {
        const VertexId lo = std::min({*ia, *ib, *ic});
        if (*ia == lo && *ib == lo && *ic == lo) {
            ++count;
            ++ia;
            ++ib;
            ++ic;
            continue;
        }
        if (*ia == lo) ++ia;
        if (*ib == lo) ++ib;
        if (*ic == lo) ++ic;
    }
    return count;
}

PairInteraction classify_pair(const Hyperedge& a, const Hyperedge& b) {
    const std::uint32_t shared = intersection_size(a, b);
    return PairInteraction{classify_sizes(shared, a.size(), b.size()), shared};
}

}  // namespace hypertri
