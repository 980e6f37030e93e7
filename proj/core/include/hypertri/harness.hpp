#ifndef HYPERTRI_HARNESS_HPP
#define HYPERTRI_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hypertri/oracle.hpp"
#include "hypertri/types.hpp"

namespace hypertri {

enum class Algorithm { HTCount, HTCountP };

struct EstimatorConfig {
    Algorithm algo = Algorithm::HTCount;
    std::uint64_t budget = 0;
    double tau = 0.9;        // HTCount-P only
    int max_subsets = 10;    // HTCount-P only
    bool count_evicted = false;
};

// End-of-stream state of a single estimator run.
struct TrialResult {
    TriangleEstimates estimates;
    std::uint64_t observed = 0;
    std::uint64_t sampled = 0;      // edges currently in the sample(s)
    std::uint64_t used_slots = 0;
    std::uint64_t memory_violations = 0;
    std::uint64_t oversized_edges = 0;
    // Worst observed-to-sampled pair/triple ratios: for HTCount these are the
    // single-reservoir theta/gamma, for HTCount-P the Phi_1/Phi_2 maxima.
    double phi_pair = 1.0;
    double phi_triple = 1.0;
    int subsets = 1;
};

// One pass of the configured estimator over a replayable stream.
TrialResult run_stream(const std::vector<Hyperedge>& stream,
                       const EstimatorConfig& config, std::uint64_t seed);

// Mean / variance / standard error of one estimated quantity across trials,
// against its exact value. Relative error is reported both ways: of the mean
// estimate, and as the mean of per-trial errors.
struct QuantityStats {
    std::string name;
    double exact = 0.0;
    double mean = 0.0;
    double variance = 0.0;   // sample variance (n - 1)
    double stderr_mean = 0.0;
    double rel_error_of_mean = -1.0;  // -1 when exact == 0 (not applicable)
    double mean_rel_error = -1.0;
    double variance_bound = -1.0;     // -1 when arity makes it undefined
};

struct TrialStatistics {
    int trials = 0;
    std::uint64_t base_seed = 0;
    ExactCounts exact;
    std::vector<TrialResult> results;       // ordered by seed offset
    std::vector<QuantityStats> quantities;  // inner..ttt, in schema order
    std::uint64_t memory_violations = 0;    // summed across trials
};

// Runs `trials` independent estimator instances with seeds base_seed + k.
// Trials execute in parallel; aggregation is ordered by seed so the result
// is deterministic. `threads` <= 0 picks the hardware concurrency.
TrialStatistics run_trials(const std::vector<Hyperedge>& stream,
                           const EstimatorConfig& config, int trials,
                           std::uint64_t base_seed, int threads = 0);

struct Snapshot {
    std::uint64_t edges_processed = 0;
    TriangleEstimates estimates;
    std::uint64_t used_slots = 0;
    double elapsed_seconds = 0.0;
};

struct SnapshotSeries {
    std::vector<Snapshot> snapshots;
};

// Estimates and utilization at `snapshot_count` evenly spaced points of the
// stream; the last snapshot always falls on the final edge.
SnapshotSeries track(const std::vector<Hyperedge>& stream,
                     const EstimatorConfig& config, int snapshot_count,
                     std::uint64_t seed);

}  // namespace hypertri

#endif  // HYPERTRI_HARNESS_HPP
