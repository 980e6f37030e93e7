#ifndef HYPERTRI_HTCOUNT_HPP
#define HYPERTRI_HTCOUNT_HPP

#include <cstdint>

#include "hypertri/engine.hpp"
#include "hypertri/reservoir.hpp"
#include "hypertri/rng.hpp"
#include "hypertri/types.hpp"

namespace hypertri {

// Closed-form correction factors of the single reservoir. Both return 1
// exactly while the sample is unsaturated (sample_size == observed).
// Throws std::invalid_argument below the arity requirement.
double correction_theta(std::uint64_t observed, std::uint64_t sample_size);
double correction_gamma(std::uint64_t observed, std::uint64_t sample_size);

// Memory-aware reservoir estimator over a hypergraph stream: exact inner
// counting, multi-eviction reservoir sampling, and correction-weighted
// hybrid/outer/class estimates.
class HTCount {
public:
    struct Options {
        std::uint64_t budget = 0;  // M, in vertex slots
        std::uint64_t seed = 0;
        // When true, triangle updates run even if e itself was evicted
        // inside the overflow loop. Off by default: the correction factors
        // assume every counted edge is in the sample at counting time.
        bool count_evicted = false;
    };

    explicit HTCount(const Options& opts);

    // Feeds the next stream element and returns the updated estimates.
    const TriangleEstimates& process(const Hyperedge& e);

    const TriangleEstimates& estimates() const { return estimates_; }
    std::uint64_t observed() const { return cell_.observed; }
    std::uint64_t sample_size() const { return cell_.sample.size(); }
    std::uint64_t used_slots() const { return cell_.used_slots; }
    std::uint64_t budget() const { return cell_.budget; }
    bool saturated() const { return cell_.saturated; }
    std::uint64_t oversized_edges() const { return oversized_; }
    std::uint64_t memory_violations() const { return violations_; }

private:
    ReservoirCell cell_;
    Rng rng_;
    TriangleEstimates estimates_;
    bool count_evicted_;
    std::uint64_t oversized_ = 0;
    std::uint64_t violations_ = 0;
};

}  // namespace hypertri

#endif  // HYPERTRI_HTCOUNT_HPP
