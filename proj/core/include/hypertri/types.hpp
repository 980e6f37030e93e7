#ifndef HYPERTRI_TYPES_HPP
#define HYPERTRI_TYPES_HPP

#include <cstdint>
#include <vector>

namespace hypertri {

// Vertices are stored as 32-bit integers; one vertex = one memory slot.
using VertexId = std::uint32_t;

// A hyperedge: the arrival position in the stream (1-based) plus a sorted,
// deduplicated vertex set. Sortedness makes intersections a linear merge.
struct Hyperedge {
    std::uint64_t arrival_index = 0;
    std::vector<VertexId> vertices;

    std::size_t size() const { return vertices.size(); }
};

// Builds a hyperedge from arbitrary vertex input: sorts and removes
// duplicates. Returns the number of duplicates dropped via `dropped`
// when non-null.
Hyperedge make_hyperedge(std::uint64_t arrival_index,
                         std::vector<VertexId> vertices,
                         std::size_t* dropped = nullptr);

// An in-memory hypergraph; edges appear in arrival order and edge i
// carries arrival_index i+1.
struct Hypergraph {
    std::vector<Hyperedge> edges;
};

// Accumulators for all estimated quantities. `inner` is exact by
// construction (never scaled by a correction factor), the rest carry
// correction-weighted real values.
struct TriangleEstimates {
    std::uint64_t inner = 0;
    double hybrid = 0.0;
    double outer = 0.0;
    double ccc = 0.0;
    double tcc = 0.0;
    double ttc = 0.0;
    double ttt = 0.0;
};

enum class PairKind { Disjoint, Intersection, Inclusion };

struct PairInteraction {
    PairKind kind = PairKind::Disjoint;
    std::uint32_t shared = 0;  // |e_i ∩ e_j|
};

// |a ∩ b| by linear merge over the two sorted vertex lists.
std::uint32_t intersection_size(const Hyperedge& a, const Hyperedge& b);

// |a ∩ b ∩ c| by three-way merge.
std::uint32_t triple_intersection_size(const Hyperedge& a, const Hyperedge& b,
                                       const Hyperedge& c);

// Disjoint if the intersection is empty, Inclusion if one vertex set
// contains the other (equal edges included), Intersection otherwise.
PairInteraction classify_pair(const Hyperedge& a, const Hyperedge& b);

// Same classification from precomputed sizes; used in hot loops where the
// intersection size is already at hand.
inline PairKind classify_sizes(std::uint32_t shared, std::size_t size_a,
                               std::size_t size_b) {
    if (shared == 0) return PairKind::Disjoint;
    const std::size_t smaller = size_a < size_b ? size_a : size_b;
    return shared == smaller ? PairKind::Inclusion : PairKind::Intersection;
}

// n choose 3 = n(n-1)(n-2)/6; 0 for n < 3.
inline std::uint64_t binom3(std::uint64_t n) {
    if (n < 3) return 0;
    return n * (n - 1) * (n - 2) / 6;
}

}  // namespace hypertri

#endif  // HYPERTRI_TYPES_HPP
