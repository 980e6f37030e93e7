#include "hypertri/htcountp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hypertri/engine.hpp"

namespace hypertri {

namespace {

double ratio(const ReservoirCell& cell) {
    return cell.observed == 0 ? 0.0
                              : static_cast<double>(cell.sample.size()) /
                                    static_cast<double>(cell.observed);
}

double inverse_ratio(const ReservoirCell& cell) {
    return static_cast<double>(cell.observed) /
           static_cast<double>(cell.sample.size());
}

// Lazy per-pair/per-triple factors from the live subset statistics, the
// inverse joint inclusion probabilities. Same-subset factors are written in
// the same form as the single-reservoir corrections so a one-subset run is
// bit-identical to HTCount.
struct PartitionCorrections {
    const HTCountP* state;

    double pair_factor(int x, int y) const {
        if (x == y) {
            const ReservoirCell& c = state->subset(x);
            return static_cast<double>(c.observed) *
                   static_cast<double>(c.observed - 1) /
                   (static_cast<double>(c.sample.size()) *
                    static_cast<double>(c.sample.size() - 1));
        }
        return inverse_ratio(state->subset(x)) *
               inverse_ratio(state->subset(y));
    }

    double triple_factor(int x, int y, int z) const {
        if (x == y && y == z) {
            const ReservoirCell& c = state->subset(x);
            return static_cast<double>(c.observed) *
                   static_cast<double>(c.observed - 1) *
                   static_cast<double>(c.observed - 2) /
                   (static_cast<double>(c.sample.size()) *
                    static_cast<double>(c.sample.size() - 1) *
                    static_cast<double>(c.sample.size() - 2));
        }
        if (x != y && y != z && x != z)
            return inverse_ratio(state->subset(x)) *
                   inverse_ratio(state->subset(y)) *
                   inverse_ratio(state->subset(z));
        const int pair = x == y ? x : (x == z ? x : y);
        const int single = x == y ? z : (x == z ? y : x);
        return pair_factor(pair, pair) * inverse_ratio(state->subset(single));
    }
};

}  // namespace

HTCountP::HTCountP(const Options& opts)
    : budget_(opts.budget),
      tau_(opts.tau),
      max_subsets_(opts.max_subsets),
      count_evicted_(opts.count_evicted),
      rng_(opts.seed) {
    if (opts.budget == 0)
        throw std::invalid_argument("HTCountP: budget must be positive");
    if (!(opts.tau > 0.0 && opts.tau <= 1.0))
        throw std::invalid_argument("HTCountP: tau must be in (0, 1]");
    if (opts.max_subsets < 1)
        throw std::invalid_argument("HTCountP: max_subsets must be >= 1");
    subsets_.emplace_back();
    subsets_.back().budget = budget_;
    alloc_.push_back(budget_);
}

std::uint64_t HTCountP::total_used() const {
    std::uint64_t sum = 0;
    for (const auto& cell : subsets_) sum += cell.used_slots;
    return sum;
}

std::uint64_t HTCountP::total_observed() const {
    std::uint64_t sum = 0;
    for (const auto& cell : subsets_) sum += cell.observed;
    return sum;
}

std::uint64_t HTCountP::total_sampled() const {
    std::uint64_t sum = 0;
    for (const auto& cell : subsets_) sum += cell.sample.size();
    return sum;
}

bool HTCountP::maybe_extend() {
    const std::size_t l = subsets_.size();
    if (static_cast<int>(l) >= max_subsets_ || !can_extend_) return false;
    const ReservoirCell& newest = subsets_.back();
    if (newest.observed <= newest.sample.size()) return false;
    if (static_cast<double>(total_used()) / static_cast<double>(budget_) >=
        tau_)
        return false;

    // Freeze current allocations to occupancy; the new subset harvests
    // whatever is left of the total budget.
    std::uint64_t assigned = 0;
    for (std::size_t i = 0; i < l; ++i) {
        alloc_[i] = subsets_[i].used_slots;
        subsets_[i].budget = alloc_[i];
        assigned += alloc_[i];
    }
    subsets_.emplace_back();
    subsets_.back().budget = budget_ - assigned;
    alloc_.push_back(budget_ - assigned);
    can_extend_ = false;
    return true;
}

int HTCountP::route() {
    const std::size_t l = subsets_.size();
    if (l == 1) return 0;

    double older_sum = 0.0;
    for (std::size_t i = 0; i + 1 < l; ++i) older_sum += ratio(subsets_[i]);
    const double older_mean = older_sum / static_cast<double>(l - 1);
    if (ratio(subsets_.back()) < older_mean) return static_cast<int>(l - 1);

    // Newest subset caught up: weighted draw over frozen allocations.
    can_extend_ = true;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < l; ++i) total += alloc_[i];
    std::uint64_t r = rng_.uniform_index(total);
    for (std::size_t i = 0; i < l; ++i) {
        if (r < alloc_[i]) return static_cast<int>(i);
        r -= alloc_[i];
    }
    return static_cast<int>(l - 1);  // unreachable
}

const TriangleEstimates& HTCountP::process(const Hyperedge& e) {
    maybe_extend();
    const int p = route();
    ReservoirCell& cell = subsets_[p];
    ++cell.observed;
    estimates_.inner += binom3(e.size());
    if (e.size() > cell.budget) ++oversized_;

    const InsertResult result = reservoir_insert(cell, e, rng_);
    if (total_used() > budget_) ++violations_;

    if (result.survived || (count_evicted_ && result.accepted)) {
        // Counting spans the union of all subsets; cross-subset pairs and
        // triples use the joint probabilities of their subsets.
        std::vector<SampleRef> view;
        view.reserve(total_sampled());
        for (std::size_t i = 0; i < subsets_.size(); ++i)
            for (const Hyperedge& member : subsets_[i].sample)
                if (member.arrival_index != e.arrival_index)
                    view.push_back(SampleRef{&member, static_cast<int>(i)});
        update_triangles(e, p, view, PartitionCorrections{this}, estimates_);
    }
    return estimates_;
}

double HTCountP::pair_probability(int x, int y) const {
    const ReservoirCell& cx = subsets_[x];
    const ReservoirCell& cy = subsets_[y];
    if (x == y) {
        const double s = static_cast<double>(cx.sample.size());
        const double m = static_cast<double>(cx.observed);
        if (cx.sample.size() < 2)
            throw std::invalid_argument(
                "pair_probability: subset holds fewer than 2 samples");
        return s * (s - 1) / (m * (m - 1));
    }
    if (cx.sample.empty() || cy.sample.empty())
        throw std::invalid_argument("pair_probability: empty subset");
    return ratio(cx) * ratio(cy);
}

double HTCountP::triple_probability(int x, int y, int z) const {
    // Symmetric in its arguments; normalize to the three subset cases.
    if (x == y && y == z) {
        const ReservoirCell& c = subsets_[x];
        if (c.sample.size() < 3)
            throw std::invalid_argument(
                "triple_probability: subset holds fewer than 3 samples");
        const double s = static_cast<double>(c.sample.size());
        const double m = static_cast<double>(c.observed);
        return s * (s - 1) * (s - 2) / (m * (m - 1) * (m - 2));
    }
    if (x != y && y != z && x != z)
        return ratio(subsets_[x]) * ratio(subsets_[y]) * ratio(subsets_[z]);
    // Exactly two coincide.
    int pair = x, single = z;
    if (x == y) {
        pair = x;
        single = z;
    } else if (x == z) {
        pair = x;
        single = y;
    } else {  // y == z
        pair = y;
        single = x;
    }
    return pair_probability(pair, pair) * ratio(subsets_[single]);
}

double HTCountP::phi_pair() const {
    double phi = 0.0;
    for (const auto& cell : subsets_) {
        if (cell.sample.size() < 2) continue;
        const double s = static_cast<double>(cell.sample.size());
        const double m = static_cast<double>(cell.observed);
        phi = std::max(phi, m * (m - 1) / (s * (s - 1)));
    }
    return phi;
}

double HTCountP::phi_triple() const {
    double phi = 0.0;
    for (const auto& cell : subsets_) {
        if (cell.sample.size() < 3) continue;
        const double s = static_cast<double>(cell.sample.size());
        const double m = static_cast<double>(cell.observed);
        phi = std::max(phi, m * (m - 1) * (m - 2) / (s * (s - 1) * (s - 2)));
    }
    return phi;
}

}  // namespace hypertri
