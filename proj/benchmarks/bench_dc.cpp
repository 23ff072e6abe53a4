#include <benchmark/benchmark.h>

#include <random>

#include "bitgraph/genasm_dc.hpp"
#include "bitgraph/genasm_tb.hpp"

using namespace bitgraph;

namespace {

std::string random_dna(std::mt19937_64& rng, std::size_t n) {
    std::string s(n, 'A');
    for (auto& c : s) c = "ACGT"[rng() % 4];
    return s;
}

std::string mutate(std::mt19937_64& rng, std::string s, double rate) {
    for (auto& c : s) {
        if (static_cast<double>(rng() % 10000) < rate * 10000) c = "ACGT"[rng() % 4];
    }
    return s;
}

void BM_DcScan(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    const int k = static_cast<int>(state.range(2));
    const auto text = random_dna(rng, n);
    const auto t = EncodedSequence::encode(text);
    const auto masks = generate_pattern_bitmasks(EncodedSequence::encode(mutate(rng, text.substr(n / 2, m), 0.05)));
    for (auto _ : state) benchmark::DoNotOptimize(dc_scan(t, masks, DcParams{k}));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_DcScan)->Args({1000, 64, 8})->Args({10000, 100, 10})->Args({10000, 256, 32})->Args({2000, 1000, 100});

void BM_DcWindows(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto text = random_dna(rng, 200000);
    const auto t = EncodedSequence::encode(text);
    const auto p = EncodedSequence::encode(mutate(rng, text.substr(50000, 150), 0.05));
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dc_windows(t, p, 15, workers));
}
BENCHMARK(BM_DcWindows)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_CaptureStored(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto text = random_dna(rng, 64);
    const auto t = EncodedSequence::encode(text);
    const auto masks = generate_pattern_bitmasks(EncodedSequence::encode(mutate(rng, text, 0.1)));
    const auto stored = static_cast<StoredVectors>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dc_scan(t, masks, DcParams{63, true, stored}));
}
BENCHMARK(BM_CaptureStored)->DenseRange(0, 3);

void BM_AlignWindowed(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const auto m = static_cast<std::size_t>(state.range(0));
    const auto source = random_dna(rng, m);
    const auto text = EncodedSequence::encode(random_dna(rng, 50) + source + random_dna(rng, 50));
    const auto read = EncodedSequence::encode(mutate(rng, source, 0.10));
    TbParams tp;
    tp.max_edits = static_cast<int>(m / 5);
    for (auto _ : state) benchmark::DoNotOptimize(align_windowed(text, read, tp));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * m));
}
BENCHMARK(BM_AlignWindowed)->Arg(150)->Arg(1000)->Arg(3000);

} // namespace

BENCHMARK_MAIN();
