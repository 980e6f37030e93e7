#include <benchmark/benchmark.h>

#include "hypertri/harness.hpp"
#include "hypertri/htcount.hpp"
#include "hypertri/htcountp.hpp"
#include "hypertri/oracle.hpp"
#include "hypertri/synthetic.hpp"

using namespace hypertri;

namespace {

void BM_IntersectionSize(benchmark::State& state) {
    const auto edge_size = static_cast<std::uint32_t>(state.range(0));
    const auto stream = uniform_stream(2, 10 * edge_size, edge_size,
                                       edge_size, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(intersection_size(stream[0], stream[1]));
}
BENCHMARK(BM_IntersectionSize)->Arg(4)->Arg(16)->Arg(64)->Arg(256);

void BM_ExactCount(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Hypergraph h{uniform_stream(n, 60, 2, 10, 7)};
    for (auto _ : state) benchmark::DoNotOptimize(exact_count(h));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactCount)->Arg(50)->Arg(100)->Arg(200)->Complexity();

void BM_HTCountStream(benchmark::State& state) {
    const auto stream = uniform_stream(2000, 500, 2, 10, 99);
    const auto budget = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        HTCount est({budget, 1});
        for (const auto& e : stream) est.process(e);
        benchmark::DoNotOptimize(est.estimates());
    }
    state.SetItemsProcessed(state.iterations() * stream.size());
}
BENCHMARK(BM_HTCountStream)->Arg(256)->Arg(1024)->Arg(4096);

void BM_HTCountPStream(benchmark::State& state) {
    const auto stream = zipf_stream(2000, 5000, 2, 100, 1.2, 99);
    const auto budget = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        HTCountP est({budget, 0.9, 10, 1});
        for (const auto& e : stream) est.process(e);
        benchmark::DoNotOptimize(est.estimates());
    }
    state.SetItemsProcessed(state.iterations() * stream.size());
}
BENCHMARK(BM_HTCountPStream)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
