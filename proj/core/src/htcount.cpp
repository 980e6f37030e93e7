#include "hypertri/htcount.hpp"

#include <stdexcept>

namespace hypertri {

double correction_theta(std::uint64_t observed, std::uint64_t sample_size) {
    if (sample_size < 2)
        throw std::invalid_argument("correction_theta: sample_size < 2");
    return static_cast<double>(observed) * static_cast<double>(observed - 1) /
           (static_cast<double>(sample_size) *
            static_cast<double>(sample_size - 1));
}

double correction_gamma(std::uint64_t observed, std::uint64_t sample_size) {
    if (sample_size < 3)
        throw std::invalid_argument("correction_gamma: sample_size < 3");
    return static_cast<double>(observed) * static_cast<double>(observed - 1) *
           static_cast<double>(observed - 2) /
           (static_cast<double>(sample_size) *
            static_cast<double>(sample_size - 1) *
            static_cast<double>(sample_size - 2));
}

HTCount::HTCount(const Options& opts)
    : rng_(opts.seed), count_evicted_(opts.count_evicted) {
    if (opts.budget == 0)
        throw std::invalid_argument("HTCount: budget must be positive");
    cell_.budget = opts.budget;
}

const TriangleEstimates& HTCount::process(const Hyperedge& e) {
    ++cell_.observed;
    estimates_.inner += binom3(e.size());
    if (e.size() > cell_.budget) ++oversized_;

    const InsertResult result = reservoir_insert(cell_, e, rng_);
    if (cell_.used_slots > cell_.budget) ++violations_;

    if (result.survived || (count_evicted_ && result.accepted)) {
        // Factors from the post-eviction sample size; they evaluate to 1
        // exactly while the sample is unsaturated.
        const std::uint64_t s = cell_.sample.size();
        ConstantCorrections corr;
        if (s >= 2) corr.theta = correction_theta(cell_.observed, s);
        if (s >= 3) corr.gamma = correction_gamma(cell_.observed, s);

        std::vector<SampleRef> view;
        view.reserve(cell_.sample.size());
        for (const Hyperedge& member : cell_.sample)
            if (member.arrival_index != e.arrival_index)
                view.push_back(SampleRef{&member, 0});
        update_triangles(e, 0, view, corr, estimates_);
    }
    return estimates_;
}

}  // namespace hypertri
