#ifndef HYPERTRI_RESERVOIR_HPP
#define HYPERTRI_RESERVOIR_HPP

#include <cstdint>
#include <vector>

#include "hypertri/rng.hpp"
#include "hypertri/types.hpp"

namespace hypertri {

// One reservoir over a vertex-slot budget. HTCount owns a single cell;
// HTCount-P owns one per sample subset.
struct ReservoirCell {
    std::vector<Hyperedge> sample;   // G_s
    std::uint64_t used_slots = 0;    // M_s, total vertices held
    std::uint64_t budget = 0;        // M (or the subset allocation M')
    std::uint64_t observed = 0;      // m, edges routed to this cell
    bool saturated = false;          // Bernoulli branch entered at least once

    double inclusion_probability() const {
        return observed == 0
                   ? 1.0
                   : static_cast<double>(sample.size()) /
                         static_cast<double>(observed);
    }
};

struct InsertResult {
    bool accepted = false;  // e passed the saturating branch or the Bernoulli
    bool survived = false;  // e is still in the sample after the overflow loop
};

// Reservoir step for one incoming hyperedge. The caller must have
// incremented cell.observed already. While the sample is still saturating
// (every edge so far kept and e fits) e is appended; otherwise e is accepted
// with probability |G_s|/m, replaces one uniformly random member, and the
// sample is evicted uniformly at random until it fits the budget again.
// e itself is an eligible eviction candidate.
InsertResult reservoir_insert(ReservoirCell& cell, const Hyperedge& e, Rng& rng);

}  // namespace hypertri

#endif  // HYPERTRI_RESERVOIR_HPP
