#include "hypertri/reservoir.hpp"

#include <utility>

namespace hypertri {

namespace {

// Swap-remove; uniform eviction does not depend on sample order.
void evict_at(ReservoirCell& cell, std::size_t idx) {
    cell.used_slots -= cell.sample[idx].size();
    if (idx != cell.sample.size() - 1)
        cell.sample[idx] = std::move(cell.sample.back());
    cell.sample.pop_back();
}

}  // namespace

InsertResult reservoir_insert(ReservoirCell& cell, const Hyperedge& e,
                              Rng& rng) {
    if (!cell.saturated && cell.used_slots + e.size() <= cell.budget &&
        cell.sample.size() == cell.observed - 1) {
        cell.sample.push_back(e);
        cell.used_slots += e.size();
        return {true, true};
    }
    cell.saturated = true;

    const double p = cell.sample.empty()
                         ? 0.0
                         : static_cast<double>(cell.sample.size()) /
                               static_cast<double>(cell.observed);
    if (!rng.bernoulli(p)) return {false, false};

    evict_at(cell, rng.uniform_index(cell.sample.size()));
    cell.sample.push_back(e);
    cell.used_slots += e.size();

    bool survived = true;
    while (cell.used_slots > cell.budget) {
        const std::size_t idx = rng.uniform_index(cell.sample.size());
        if (cell.sample[idx].arrival_index == e.arrival_index) survived = false;
        evict_at(cell, idx);
    }
    return {true, survived};
}

}  // namespace hypertri
