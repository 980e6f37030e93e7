#ifndef HYPERTRI_HTCOUNTP_HPP
#define HYPERTRI_HTCOUNTP_HPP

#include <cstdint>
#include <vector>

#include "hypertri/reservoir.hpp"
#include "hypertri/rng.hpp"
#include "hypertri/types.hpp"

namespace hypertri {

// Partition-based estimator: unused memory is split into independent sample
// subsets, incoming hyperedges are routed by weighted allocation, and
// correction factors come from the joint inclusion probabilities of the
// subsets holding each counted pair/triple.
class HTCountP {
public:
    struct Options {
        std::uint64_t budget = 0;  // M, total vertex slots
        double tau = 0.9;          // utilization threshold for splitting
        int max_subsets = 10;      // N
        std::uint64_t seed = 0;
        bool count_evicted = false;
    };

    explicit HTCountP(const Options& opts);

    const TriangleEstimates& process(const Hyperedge& e);

    const TriangleEstimates& estimates() const { return estimates_; }
    int active_subsets() const { return static_cast<int>(subsets_.size()); }
    std::uint64_t total_used() const;
    std::uint64_t total_observed() const;
    std::uint64_t total_sampled() const;
    std::uint64_t budget() const { return budget_; }
    std::uint64_t oversized_edges() const { return oversized_; }
    std::uint64_t memory_violations() const { return violations_; }
    const ReservoirCell& subset(int i) const { return subsets_[i]; }

    // Joint inclusion probability of two / three sampled edges given the
    // subsets they live in (0-based). Throws std::invalid_argument when the
    // subset cannot hold that many sampled edges.
    double pair_probability(int x, int y) const;
    double triple_probability(int x, int y, int z) const;

    // Worst per-subset observed-to-sampled pair/triple ratio (Phi_1 / Phi_2);
    // subsets too small to contribute a pair/triple are skipped.
    double phi_pair() const;
    double phi_triple() const;

private:
    bool maybe_extend();
    int route();

    std::vector<ReservoirCell> subsets_;   // the active cells [0, l)
    std::vector<std::uint64_t> alloc_;     // frozen allocations M'
    std::uint64_t budget_;
    double tau_;
    int max_subsets_;
    bool can_extend_ = true;
    bool count_evicted_;
    Rng rng_;
    TriangleEstimates estimates_;
    std::uint64_t oversized_ = 0;
    std::uint64_t violations_ = 0;
};

}  // namespace hypertri

#endif  // HYPERTRI_HTCOUNTP_HPP
