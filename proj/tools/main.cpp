// hypertri: triangle-count estimation over hypergraph streams.
//
// Subcommands:
//   exact     brute-force counts of a whole file
//   estimate  one streaming pass with a memory budget
//   bench     repeated seeded trials with statistics vs the exact counts
//   track     snapshot series over the stream as CSV

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypertri/harness.hpp"
#include "hypertri/htcount.hpp"
#include "hypertri/htcountp.hpp"
#include "hypertri/metrics.hpp"
#include "hypertri/oracle.hpp"
#include "hypertri/stream_io.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace hypertri;

// 6 significant digits, '.' decimal separator, for CSV real fields.
std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HYPERTRI_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 1;
}

struct CommonOpts {
    std::string file;
    std::string algo = "htcount";
    std::uint64_t memory = 0;
    double tau = 0.9;
    int max_subsets = 10;
    std::uint64_t seed = default_seed();
    std::string format = "json";
    bool no_timing = false;
    bool count_evicted = false;
};

EstimatorConfig to_config(const CommonOpts& o) {
    EstimatorConfig cfg;
    cfg.algo = o.algo == "htcount-p" ? Algorithm::HTCountP : Algorithm::HTCount;
    cfg.budget = o.memory;
    cfg.tau = o.tau;
    cfg.max_subsets = o.max_subsets;
    cfg.count_evicted = o.count_evicted;
    return cfg;
}

std::vector<Hyperedge> load_stream(const std::string& path, ParseStats& stats) {
    if (path == "-") return parse_stream(std::cin, &stats);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_stream(in, &stats);
}

void warn_duplicates(const ParseStats& stats) {
    if (stats.duplicate_vertices > 0)
        std::cerr << "warning: dropped " << stats.duplicate_vertices
                  << " duplicate vertex id(s) within hyperedges\n";
}

void add_common_flags(CLI::App* cmd, CommonOpts& o, bool with_algo) {
    cmd->add_option("file", o.file, "input stream file ('-' for stdin)")
        ->required();
    if (with_algo) {
        cmd->add_option("--algo", o.algo, "estimator")
            ->check(CLI::IsMember({"htcount", "htcount-p"}))
            ->capture_default_str();
        cmd->add_option("--memory", o.memory,
                        "memory budget M in vertex slots (4 bytes each)")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tau", o.tau,
                        "utilization threshold (htcount-p only)")
            ->check(CLI::Range(std::numeric_limits<double>::min(), 1.0))
            ->capture_default_str();
        cmd->add_option("--max-subsets", o.max_subsets,
                        "subset cap N (htcount-p only)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--seed", o.seed,
                        "PRNG seed (default: $HYPERTRI_SEED or 1)");
        cmd->add_flag("--count-evicted", o.count_evicted,
                      "run triangle updates even when the new edge is "
                      "evicted by the overflow loop (experimental)");
    }
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--no-timing", o.no_timing,
                  "report elapsed/throughput as 0 for reproducible output");
}

int cmd_exact(const CommonOpts& o, std::size_t edge_cap) {
    ParseStats stats;
    const auto edges = load_stream(o.file, stats);
    warn_duplicates(stats);
    const ExactCounts c = exact_count(Hypergraph{edges}, edge_cap);

    if (o.format == "csv") {
        std::cout << "inner,hybrid,outer,ccc,tcc,ttc,ttt\n"
                  << c.inner << ',' << c.hybrid << ',' << c.outer << ','
                  << c.ccc << ',' << c.tcc << ',' << c.ttc << ',' << c.ttt
                  << '\n';
    } else {
        json out{{"inner", c.inner}, {"hybrid", c.hybrid}, {"outer", c.outer},
                 {"ccc", c.ccc},     {"tcc", c.tcc},       {"ttc", c.ttc},
                 {"ttt", c.ttt},     {"edges", stats.edges}};
        std::cout << out.dump() << '\n';
    }
    return 0;
}

int cmd_estimate(const CommonOpts& o) {
    std::ifstream file_in;
    std::istream* in = &std::cin;
    if (o.file != "-") {
        file_in.open(o.file);
        if (!file_in) throw std::runtime_error("cannot open '" + o.file + "'");
        in = &file_in;
    }

    const auto start = std::chrono::steady_clock::now();
    ParseStats stats;
    TriangleEstimates est;
    std::uint64_t observed = 0, sampled = 0, used = 0, oversized = 0;

    const EstimatorConfig cfg = to_config(o);
    if (cfg.algo == Algorithm::HTCount) {
        HTCount ht({cfg.budget, o.seed, cfg.count_evicted});
        for_each_hyperedge(
            *in, [&](Hyperedge&& e) { ht.process(e); }, stats);
        est = ht.estimates();
        observed = ht.observed();
        sampled = ht.sample_size();
        used = ht.used_slots();
        oversized = ht.oversized_edges();
    } else {
        HTCountP ht({cfg.budget, cfg.tau, cfg.max_subsets, o.seed,
                     cfg.count_evicted});
        for_each_hyperedge(
            *in, [&](Hyperedge&& e) { ht.process(e); }, stats);
        est = ht.estimates();
        observed = ht.total_observed();
        sampled = ht.total_sampled();
        used = ht.total_used();
        oversized = ht.oversized_edges();
    }
    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    warn_duplicates(stats);
    if (oversized > 0)
        std::cerr << "warning: " << oversized
                  << " hyperedge(s) larger than the memory budget\n";

    double kbps =
        elapsed > 0.0 ? throughput_kbps(stats.bytes_read, elapsed) : 0.0;
    if (o.no_timing) {
        elapsed = 0.0;
        kbps = 0.0;
    }
    const double util = memory_utilization(used, cfg.budget);

    if (o.format == "csv") {
        std::cout << "inner,hybrid,outer,ccc,tcc,ttc,ttt,observed,sampled,"
                     "memory_used,memory_budget,utilization,elapsed_seconds,"
                     "throughput_kbps,seed\n";
        std::cout << est.inner << ',' << fmt_real(est.hybrid) << ','
                  << fmt_real(est.outer) << ',' << fmt_real(est.ccc) << ','
                  << fmt_real(est.tcc) << ',' << fmt_real(est.ttc) << ','
                  << fmt_real(est.ttt) << ',' << observed << ',' << sampled
                  << ',' << used << ',' << cfg.budget << ',' << fmt_real(util)
                  << ',' << fmt_real(elapsed) << ',' << fmt_real(kbps) << ','
                  << o.seed << '\n';
    } else {
        json out{{"inner", est.inner},
                 {"hybrid", est.hybrid},
                 {"outer", est.outer},
                 {"ccc", est.ccc},
                 {"tcc", est.tcc},
                 {"ttc", est.ttc},
                 {"ttt", est.ttt},
                 {"observed", observed},
                 {"sampled", sampled},
                 {"memory_used", used},
                 {"memory_budget", cfg.budget},
                 {"utilization", util},
                 {"elapsed_seconds", elapsed},
                 {"throughput_kbps", kbps},
                 {"seed", o.seed}};
        std::cout << out.dump() << '\n';
    }
    return 0;
}

int cmd_bench(const CommonOpts& o, int trials, int threads) {
    ParseStats stats;
    const auto edges = load_stream(o.file, stats);
    warn_duplicates(stats);
    const TrialStatistics ts =
        run_trials(edges, to_config(o), trials, o.seed, threads);

    if (o.format == "csv") {
        std::cout << "quantity,exact,mean,stderr,variance,rel_error_of_mean,"
                     "mean_rel_error,variance_bound\n";
        for (const QuantityStats& q : ts.quantities) {
            std::cout << q.name << ',' << fmt_real(q.exact) << ','
                      << fmt_real(q.mean) << ',' << fmt_real(q.stderr_mean)
                      << ',' << fmt_real(q.variance) << ',';
            std::cout << (q.rel_error_of_mean < 0 ? "na"
                                                  : fmt_real(q.rel_error_of_mean))
                      << ',';
            std::cout << (q.mean_rel_error < 0 ? "na"
                                               : fmt_real(q.mean_rel_error))
                      << ',';
            std::cout << (q.variance_bound < 0 ? "na"
                                               : fmt_real(q.variance_bound))
                      << '\n';
        }
    } else {
        json quantities = json::array();
        for (const QuantityStats& q : ts.quantities) {
            json jq{{"name", q.name},
                    {"exact", q.exact},
                    {"mean", q.mean},
                    {"stderr", q.stderr_mean},
                    {"variance", q.variance}};
            if (q.rel_error_of_mean >= 0) {
                jq["rel_error_of_mean"] = q.rel_error_of_mean;
                jq["mean_rel_error"] = q.mean_rel_error;
            } else {
                jq["rel_error_of_mean"] = nullptr;
                jq["mean_rel_error"] = nullptr;
            }
            if (q.variance_bound >= 0)
                jq["variance_bound"] = q.variance_bound;
            else
                jq["variance_bound"] = nullptr;
            quantities.push_back(std::move(jq));
        }
        json out{{"algo", o.algo},
                 {"trials", trials},
                 {"seed", o.seed},
                 {"memory_budget", o.memory},
                 {"memory_violations", ts.memory_violations},
                 {"quantities", std::move(quantities)}};
        std::cout << out.dump() << '\n';
    }
    return 0;
}

int cmd_track(const CommonOpts& o, int snapshots) {
    ParseStats stats;
    const auto edges = load_stream(o.file, stats);
    warn_duplicates(stats);
    const SnapshotSeries series =
        track(edges, to_config(o), snapshots, o.seed);

    // Line-buffered CSV so the series can feed live tooling.
    std::cout << "edges_processed,inner,hybrid,outer,ccc,tcc,ttc,ttt,"
                 "utilization,elapsed\n";
    for (const Snapshot& s : series.snapshots) {
        const double util = memory_utilization(s.used_slots, o.memory);
        const double elapsed = o.no_timing ? 0.0 : s.elapsed_seconds;
        std::cout << s.edges_processed << ',' << s.estimates.inner << ','
                  << fmt_real(s.estimates.hybrid) << ','
                  << fmt_real(s.estimates.outer) << ','
                  << fmt_real(s.estimates.ccc) << ','
                  << fmt_real(s.estimates.tcc) << ','
                  << fmt_real(s.estimates.ttc) << ','
                  << fmt_real(s.estimates.ttt) << ',' << fmt_real(util) << ','
                  << fmt_real(elapsed) << '\n'
                  << std::flush;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangle counting in hypergraph streams"};
    app.require_subcommand(1);

    CommonOpts exact_opts, est_opts, bench_opts, track_opts;
    std::size_t edge_cap = 10000;
    int trials = 100, threads = 0, snapshots = 100;

    CLI::App* exact = app.add_subcommand("exact", "exact brute-force counts");
    add_common_flags(exact, exact_opts, false);
    exact->add_option("--edge-cap", edge_cap,
                      "refuse inputs with more edges than this")
        ->capture_default_str();

    CLI::App* estimate =
        app.add_subcommand("estimate", "single-pass streaming estimate");
    add_common_flags(estimate, est_opts, true);

    CLI::App* bench =
        app.add_subcommand("bench", "repeated seeded trials with statistics");
    add_common_flags(bench, bench_opts, true);
    bench->add_option("--trials", trials, "number of seeded trials")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    bench->add_option("--threads", threads,
                      "worker threads (0 = hardware concurrency)");

    CLI::App* trk = app.add_subcommand("track", "snapshot series as CSV");
    add_common_flags(trk, track_opts, true);
    trk->add_option("--snapshots", snapshots, "number of snapshots")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (exact->parsed()) return cmd_exact(exact_opts, edge_cap);
        if (estimate->parsed()) return cmd_estimate(est_opts);
        if (bench->parsed()) return cmd_bench(bench_opts, trials, threads);
        if (trk->parsed()) return cmd_track(track_opts, snapshots);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
