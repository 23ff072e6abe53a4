#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "bitgraph/gindex.hpp"
#include "bitgraph/minseed.hpp"

using namespace bitgraph;

namespace {

std::string random_dna(std::mt19937_64& rng, std::size_t n) {
    std::string s(n, 'A');
    for (auto& c : s) c = "ACGT"[rng() % 4];
    return s;
}

void BM_ComputeMinimizers(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto read = EncodedSequence::encode(random_dna(rng, static_cast<std::size_t>(state.range(0))));
    const MinimizerParams p{15, 10, 512};
    for (auto _ : state) benchmark::DoNotOptimize(compute_minimizers(read, p));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * read.size()));
}
BENCHMARK(BM_ComputeMinimizers)->Arg(150)->Arg(10000);

GenomeGraph chain_graph(std::size_t bases, std::size_t node_len) {
    std::mt19937_64 rng(2);
    std::vector<std::string> seqs;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t done = 0; done < bases; done += node_len) {
        if (!seqs.empty()) edges.emplace_back(seqs.size() - 1, seqs.size());
        seqs.push_back(random_dna(rng, node_len));
    }
    return GenomeGraph::from_nodes(seqs, edges);
}

void BM_BuildIndex(benchmark::State& state) {
    const auto g = chain_graph(static_cast<std::size_t>(state.range(0)), 200);
    for (auto _ : state) benchmark::DoNotOptimize(build_index(g, MinimizerParams{}));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * g.total_bases()));
}
BENCHMARK(BM_BuildIndex)->Arg(100000)->Arg(1000000);

void BM_IndexQuery(benchmark::State& state) {
    const auto g = chain_graph(1000000, 200);
    const auto idx = build_index(g, MinimizerParams{});
    std::vector<std::uint64_t> hashes;
    for (const auto& m : idx.minimizers()) hashes.push_back(m.hash);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(idx.query(hashes[i]));
        i = (i + 7919) % hashes.size();
    }
}
BENCHMARK(BM_IndexQuery);

void BM_IndexRoundTrip(benchmark::State& state) {
    const auto idx = build_index(chain_graph(200000, 200), MinimizerParams{});
    for (auto _ : state) {
        std::stringstream buf;
        write_index(buf, idx);
        benchmark::DoNotOptimize(read_index(buf));
    }
}
BENCHMARK(BM_IndexRoundTrip);

} // namespace

BENCHMARK_MAIN();
