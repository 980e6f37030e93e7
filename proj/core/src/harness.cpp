#include "hypertri/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "hypertri/htcount.hpp"
#include "hypertri/htcountp.hpp"
#include "hypertri/metrics.hpp"

namespace hypertri {

namespace {

double safe_phi_pair(std::uint64_t m, std::uint64_t s) {
    if (s < 2) return 1.0;
    return static_cast<double>(m) * static_cast<double>(m - 1) /
           (static_cast<double>(s) * static_cast<double>(s - 1));
}

double safe_phi_triple(std::uint64_t m, std::uint64_t s) {
    if (s < 3) return 1.0;
    return static_cast<double>(m) * static_cast<double>(m - 1) *
           static_cast<double>(m - 2) /
           (static_cast<double>(s) * static_cast<double>(s - 1) *
            static_cast<double>(s - 2));
}

}  // namespace

TrialResult run_stream(const std::vector<Hyperedge>& stream,
                       const EstimatorConfig& config, std::uint64_t seed) {
    TrialResult out;
    if (config.algo == Algorithm::HTCount) {
        HTCount est({config.budget, seed, config.count_evicted});
        for (const Hyperedge& e : stream) est.process(e);
        out.estimates = est.estimates();
        out.observed = est.observed();
        out.sampled = est.sample_size();
        out.used_slots = est.used_slots();
        out.memory_violations = est.memory_violations();
        out.oversized_edges = est.oversized_edges();
        out.phi_pair = safe_phi_pair(est.observed(), est.sample_size());
        out.phi_triple = safe_phi_triple(est.observed(), est.sample_size());
    } else {
        HTCountP est({config.budget, config.tau, config.max_subsets, seed,
                      config.count_evicted});
        for (const Hyperedge& e : stream) est.process(e);
        out.estimates = est.estimates();
        out.observed = est.total_observed();
        out.sampled = est.total_sampled();
        out.used_slots = est.total_used();
        out.memory_violations = est.memory_violations();
        out.oversized_edges = est.oversized_edges();
        const double p1 = est.phi_pair();
        const double p2 = est.phi_triple();
        out.phi_pair = p1 > 0.0 ? p1 : 1.0;
        out.phi_triple = p2 > 0.0 ? p2 : 1.0;
        out.subsets = est.active_subsets();
    }
    return out;
}

TrialStatistics run_trials(const std::vector<Hyperedge>& stream,
                           const EstimatorConfig& config, int trials,
                           std::uint64_t base_seed, int threads) {
    if (trials < 2)
        throw std::invalid_argument("run_trials: trials must be >= 2");

    TrialStatistics stats;
    stats.trials = trials;
    stats.base_seed = base_seed;
    stats.exact = exact_count(Hypergraph{stream});
    stats.results.resize(trials);

    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads > trials) threads = trials;

    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int k = next.fetch_add(1);
            if (k >= trials) break;
            stats.results[k] = run_stream(stream, config, base_seed + k);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (const TrialResult& r : stats.results)
        stats.memory_violations += r.memory_violations;

    // Mean phi across trials, for evaluating the variance bounds.
    double mean_phi_pair = 0.0, mean_phi_triple = 0.0;
    for (const TrialResult& r : stats.results) {
        mean_phi_pair += r.phi_pair;
        mean_phi_triple += r.phi_triple;
    }
    mean_phi_pair /= trials;
    mean_phi_triple /= trials;

    struct Extract {
        const char* name;
        double exact;
        double (*get)(const TriangleEstimates&);
        double phi_kind;  // 0 = none (inner), 1 = pair, 2 = triple
    };
    const Extract fields[] = {
        {"inner", static_cast<double>(stats.exact.inner),
         [](const TriangleEstimates& e) { return static_cast<double>(e.inner); },
         0},
        {"hybrid", static_cast<double>(stats.exact.hybrid),
         [](const TriangleEstimates& e) { return e.hybrid; }, 1},
        {"outer", static_cast<double>(stats.exact.outer),
         [](const TriangleEstimates& e) { return e.outer; }, 2},
        {"ccc", static_cast<double>(stats.exact.ccc),
         [](const TriangleEstimates& e) { return e.ccc; }, 2},
        {"tcc", static_cast<double>(stats.exact.tcc),
         [](const TriangleEstimates& e) { return e.tcc; }, 2},
        {"ttc", static_cast<double>(stats.exact.ttc),
         [](const TriangleEstimates& e) { return e.ttc; }, 2},
        {"ttt", static_cast<double>(stats.exact.ttt),
         [](const TriangleEstimates& e) { return e.ttt; }, 2},
    };

    for (const Extract& f : fields) {
        QuantityStats q;
        q.name = f.name;
        q.exact = f.exact;

        double sum = 0.0;
        for (const TrialResult& r : stats.results) sum += f.get(r.estimates);
        q.mean = sum / trials;

        double ss = 0.0;
        double rel_sum = 0.0;
        bool rel_ok = f.exact > 0.0;
        for (const TrialResult& r : stats.results) {
            const double v = f.get(r.estimates);
            ss += (v - q.mean) * (v - q.mean);
            if (rel_ok) rel_sum += std::abs(f.exact - v) / f.exact;
        }
        q.variance = ss / (trials - 1);
        q.stderr_mean = std::sqrt(q.variance / trials);
        if (rel_ok) {
            q.rel_error_of_mean = std::abs(f.exact - q.mean) / f.exact;
            q.mean_rel_error = rel_sum / trials;
        }
        if (f.phi_kind == 1)
            q.variance_bound =
                variance_bound_partitioned(f.exact, mean_phi_pair);
        else if (f.phi_kind == 2)
            q.variance_bound =
                variance_bound_partitioned(f.exact, mean_phi_triple);
        stats.quantities.push_back(std::move(q));
    }
    return stats;
}

SnapshotSeries track(const std::vector<Hyperedge>& stream,
                     const EstimatorConfig& config, int snapshot_count,
                     std::uint64_t seed) {
    if (snapshot_count < 1)
        throw std::invalid_argument("track: snapshot_count must be >= 1");

    SnapshotSeries series;
    const std::size_t n = stream.size();
    if (n == 0) return series;
    if (snapshot_count > static_cast<int>(n))
        snapshot_count = static_cast<int>(n);

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    };

    // Snapshot after edge ceil(n * (i+1) / count); the last lands on edge n.
    int taken = 0;
    auto snapshot_point = [&](int i) {
        return static_cast<std::size_t>(
            (static_cast<std::uint64_t>(n) * (i + 1) + snapshot_count - 1) /
            snapshot_count);
    };

    auto record = [&](std::uint64_t processed, const TriangleEstimates& est,
                      std::uint64_t used) {
        series.snapshots.push_back(Snapshot{processed, est, used, elapsed()});
    };

    if (config.algo == Algorithm::HTCount) {
        HTCount est({config.budget, seed, config.count_evicted});
        for (std::size_t i = 0; i < n; ++i) {
            est.process(stream[i]);
            if (i + 1 == snapshot_point(taken)) {
                record(i + 1, est.estimates(), est.used_slots());
                ++taken;
            }
        }
    } else {
        HTCountP est({config.budget, config.tau, config.max_subsets, seed,
                      config.count_evicted});
        for (std::size_t i = 0; i < n; ++i) {
            est.process(stream[i]);
            if (i + 1 == snapshot_point(taken)) {
                record(i + 1, est.estimates(), est.total_used());
                ++taken;
            }
        }
    }
    return series;
}

}  // namespace hypertri
