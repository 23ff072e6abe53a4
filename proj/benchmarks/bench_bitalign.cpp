#include <benchmark/benchmark.h>

#include <random>

#include "bitgraph/bitalign.hpp"

using namespace bitgraph;

namespace {

/// Path with a bubble every `spacing` characters.
CharGraph bubbly_graph(std::mt19937_64& rng, std::size_t n, std::size_t spacing) {
    std::vector<std::uint8_t> codes(n);
    std::vector<std::vector<std::uint32_t>> succ(n);
    for (std::size_t i = 0; i < n; ++i) {
        codes[i] = static_cast<std::uint8_t>(rng() % 4);
        if (i + 1 < n) succ[i].push_back(static_cast<std::uint32_t>(i + 1));
        if (i % spacing == 0 && i + 2 < n) succ[i].push_back(static_cast<std::uint32_t>(i + 2));
    }
    return CharGraph::from_lists(std::move(codes), succ);
}

void BM_GraphDc(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    const auto cg = bubbly_graph(rng, n, 20);
    std::string pattern;
    for (std::size_t i = 0; i < m; ++i) pattern += "ACGT"[cg.code(i + n / 4)];
    const auto masks = generate_pattern_bitmasks(EncodedSequence::encode(pattern));
    const int k = static_cast<int>(m / 10);
    for (auto _ : state) benchmark::DoNotOptimize(graph_dc(cg, masks, k));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_GraphDc)->Args({200, 150})->Args({1000, 150})->Args({2000, 1000});

void BM_AlignToGraph(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto cg = bubbly_graph(rng, 400, 15);
    std::string pattern;
    for (std::size_t i = 100; i < 250; ++i) pattern += "ACGT"[cg.code(i)];
    pattern[30] = pattern[30] == 'A' ? 'C' : 'A';
    const auto p = EncodedSequence::encode(pattern);
    for (auto _ : state) benchmark::DoNotOptimize(align_to_graph(cg, p, 15));
}
BENCHMARK(BM_AlignToGraph);

} // namespace

BENCHMARK_MAIN();
