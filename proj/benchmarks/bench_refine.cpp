#include <benchmark/benchmark.h>

#include <random>

#include "bisimlab/engine.hpp"
#include "bisimlab/families.hpp"
#include "bisimlab/oracle.hpp"
#include "bisimlab/parallel.hpp"
#include "bisimlab/roberts.hpp"

using namespace bisimlab;

namespace {

// deterministic one-action system with a few seed blocks, fixed per size
Lts random_walk_lts(int n) {
    std::mt19937 rng(77 + static_cast<unsigned>(n));
    std::vector<Transition> edges;
    for (int s = 0; s < n; ++s)
        edges.push_back({s, 0, static_cast<int>(rng() % static_cast<unsigned>(n))});
    std::vector<int> blocks(n);
    for (int s = 0; s < n; ++s)
        blocks[s] = static_cast<int>(rng() % 3);
    blocks[0] = 0;
    return Lts(n, {"a1"}, edges, Partition::from_block_of(blocks));
}

void BM_bisplitter_single(benchmark::State& state) {
    Lts b = bisplitter(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_to_stable(b, Strategy::SingleSplitter).total_cost);
    state.SetComplexityN(b.state_count());
}
BENCHMARK(BM_bisplitter_single)->DenseRange(4, 10, 2)->Complexity();

void BM_bisplitter_signature(benchmark::State& state) {
    Lts b = bisplitter(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_to_stable(b, Strategy::FullSignature).total_cost);
    state.SetComplexityN(b.state_count());
}
BENCHMARK(BM_bisplitter_signature)->DenseRange(4, 10, 2)->Complexity();

void BM_layered_single(benchmark::State& state) {
    Lts c = layered_bisplitter(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_to_stable(c, Strategy::SingleSplitter).total_cost);
}
BENCHMARK(BM_layered_single)->DenseRange(3, 5);

void BM_chain_single(benchmark::State& state) {
    Lts d = sequential_splitter(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_to_stable(d, Strategy::SingleSplitter).total_cost);
}
BENCHMARK(BM_chain_single)->Arg(64)->Arg(256)->Arg(1024);

void BM_roberts(benchmark::State& state) {
    Lts lts = random_walk_lts(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(roberts_partition(lts).symbol_comparisons);
}
BENCHMARK(BM_roberts)->Arg(100)->Arg(1000)->Arg(10000);

void BM_oracle(benchmark::State& state) {
    Lts b = bisplitter(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bisimilarity_oracle(b).block_count());
}
BENCHMARK(BM_oracle)->DenseRange(4, 8, 2);

void BM_parallel_rounds(benchmark::State& state) {
    Lts f = fanin_splitter(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_parallel_rounds(f).steps());
}
BENCHMARK(BM_parallel_rounds)->Arg(8)->Arg(10)->Arg(12);

void BM_pointer_jump(benchmark::State& state) {
    Lts d = sequential_splitter(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pointer_jump_distances(d).rounds);
}
BENCHMARK(BM_pointer_jump)->Arg(1025)->Arg(4097)->Arg(16385);

} // namespace

BENCHMARK_MAIN();
