#ifndef HYPERTRI_TESTS_SUPPORT_HPP
#define HYPERTRI_TESTS_SUPPORT_HPP

// Test-only helpers: random instance generation and an independent
// configuration-level enumerator used as the oracle's oracle. The enumerator
// lists explicit vertex configurations with membership tests only; it shares
// no code path with the counting formulas it checks.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hypertri/oracle.hpp"
#include "hypertri/rng.hpp"
#include "hypertri/types.hpp"

namespace hypertri::testing {

inline Hypergraph random_hypergraph(Rng& rng, std::size_t max_edges,
                                    std::uint32_t max_vertex,
                                    std::uint32_t min_size,
                                    std::uint32_t max_size) {
    const std::size_t n_edges = 1 + rng.uniform_index(max_edges);
    Hypergraph h;
    for (std::size_t i = 0; i < n_edges; ++i) {
        const std::uint32_t cap = std::min(max_size, max_vertex);
        const std::uint32_t lo = std::min(min_size, cap);
        const std::uint32_t size =
            lo + static_cast<std::uint32_t>(rng.uniform_index(cap - lo + 1));
        std::vector<VertexId> verts;
        while (verts.size() < size) {
            const VertexId v =
                static_cast<VertexId>(rng.uniform_index(max_vertex));
            if (std::find(verts.begin(), verts.end(), v) == verts.end())
                verts.push_back(v);
        }
        h.edges.push_back(make_hyperedge(i + 1, std::move(verts)));
    }
    return h;
}

inline bool contains(const Hyperedge& e, VertexId v) {
    return std::binary_search(e.vertices.begin(), e.vertices.end(), v);
}

// Inner: every 3-subset of every edge, enumerated by explicit triple loops.
inline std::uint64_t enumerate_inner(const Hypergraph& h) {
    std::uint64_t count = 0;
    for (const Hyperedge& e : h.edges) {
        const std::size_t s = e.size();
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = a + 1; b < s; ++b)
                for (std::size_t c = b + 1; c < s; ++c) ++count;
    }
    return count;
}

// Hybrid: (unordered edge pair, 2-subset of the shared vertices, one vertex
// exclusive to exactly one of the two edges).
inline std::uint64_t enumerate_hybrid(const Hypergraph& h) {
    std::uint64_t count = 0;
    const std::size_t n = h.edges.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Hyperedge& ei = h.edges[i];
            const Hyperedge& ej = h.edges[j];
            std::vector<VertexId> shared;
            for (VertexId v : ei.vertices)
                if (contains(ej, v)) shared.push_back(v);
            if (shared.size() < 2) continue;
            std::uint64_t exclusive = 0;
            for (VertexId v : ei.vertices)
                if (!contains(ej, v)) ++exclusive;
            for (VertexId v : ej.vertices)
                if (!contains(ei, v)) ++exclusive;
            for (std::size_t a = 0; a < shared.size(); ++a)
                for (std::size_t b = a + 1; b < shared.size(); ++b)
                    count += exclusive;
        }
    }
    return count;
}

// Outer: (unordered edge triple with all pairwise intersections non-empty,
// one vertex from each pairwise-exclusive region).
inline std::uint64_t enumerate_outer(const Hypergraph& h) {
    std::uint64_t count = 0;
    const std::size_t n = h.edges.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Hyperedge& ei = h.edges[i];
                const Hyperedge& ej = h.edges[j];
                const Hyperedge& ek = h.edges[k];
                std::uint64_t ij = 0, ik = 0, jk = 0;
                bool ij_any = false, ik_any = false, jk_any = false;
                for (VertexId v : ei.vertices) {
                    const bool in_j = contains(ej, v);
                    const bool in_k = contains(ek, v);
                    if (in_j) ij_any = true;
                    if (in_k) ik_any = true;
                    if (in_j && !in_k) ++ij;
                    if (in_k && !in_j) ++ik;
                }
                for (VertexId v : ej.vertices) {
                    const bool in_k = contains(ek, v);
                    if (in_k) jk_any = true;
                    if (in_k && !contains(ei, v)) ++jk;
                }
                if (!ij_any || !ik_any || !jk_any) continue;
                count += ij * ik * jk;
            }
        }
    }
    return count;
}

// Hyper-edge classes by explicit subset checks.
inline void enumerate_classes(const Hypergraph& h, std::uint64_t& ccc,
                              std::uint64_t& tcc, std::uint64_t& ttc,
                              std::uint64_t& ttt) {
    ccc = tcc = ttc = ttt = 0;
    const std::size_t n = h.edges.size();
    auto connected = [](const Hyperedge& a, const Hyperedge& b) {
        for (VertexId v : a.vertices)
            if (contains(b, v)) return true;
        return false;
    };
    auto subset_of = [](const Hyperedge& a, const Hyperedge& b) {
        for (VertexId v : a.vertices)
            if (!contains(b, v)) return false;
        return true;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!connected(h.edges[i], h.edges[j])) continue;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!connected(h.edges[i], h.edges[k]) ||
                    !connected(h.edges[j], h.edges[k]))
                    continue;
                int inclusions = 0;
                const Hyperedge* es[3] = {&h.edges[i], &h.edges[j],
                                          &h.edges[k]};
                const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
                for (const auto& p : pairs)
                    if (subset_of(*es[p[0]], *es[p[1]]) ||
                        subset_of(*es[p[1]], *es[p[0]]))
                        ++inclusions;
                switch (inclusions) {
                    case 3: ++ccc; break;
                    case 2: ++tcc; break;
                    case 1: ++ttc; break;
                    default: ++ttt; break;
                }
            }
        }
    }
}

}  // namespace hypertri::testing

#endif  // HYPERTRI_TESTS_SUPPORT_HPP
