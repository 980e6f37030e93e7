#ifndef HYPERTRI_ORACLE_HPP
#define HYPERTRI_ORACLE_HPP

#include <cstdint>

#include "hypertri/types.hpp"

namespace hypertri {

// Exact triangle counts of an in-memory hypergraph. Counting is
// configuration-based: a vertex triple contained in two hyperedges
// contributes 2 to inner, matching what the streaming estimators estimate.
struct ExactCounts {
    std::uint64_t inner = 0;
    std::uint64_t hybrid = 0;
    std::uint64_t outer = 0;
    std::uint64_t ccc = 0;
    std::uint64_t tcc = 0;
    std::uint64_t ttc = 0;
    std::uint64_t ttt = 0;
};

// Brute-force ground truth over all edge pairs and triples. Intended for
// desk-scale instances; throws std::invalid_argument when the edge count
// exceeds `edge_cap` to guard against accidental cubic blowups.
ExactCounts exact_count(const Hypergraph& h, std::size_t edge_cap = 10000);

}  // namespace hypertri

#endif  // HYPERTRI_ORACLE_HPP
