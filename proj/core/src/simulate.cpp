#include "bitgraph/simulate.hpp"

#include <cstdlib>

#include "bitgraph/errors.hpp"
#include "bitgraph/sequence.hpp"

namespace bitgraph {

std::uint64_t seed_from_env(std::uint64_t fallback) {
    if (const char* env = std::getenv("BITGRAPH_SEED"); env && *env) return std::strtoull(env, nullptr, 10);
    return fallback;
}

std::vector<SimulatedRead> simulate_reads(const GenomeGraph& graph, const SimulationParams& params) {
    if (graph.total_bases() < params.read_length || params.read_length == 0) {
        throw Error(ErrorCode::InvalidParameter, "graph is too small for the requested read length");
    }
    if (!(params.error_rate >= 0.0 && params.error_rate < 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "error rate must lie in [0, 1)");
    }
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<std::size_t> any_base(0, graph.total_bases() - 1);
    static constexpr char kBases[] = "ACGT";

    auto locate = [&](std::size_t global) {
        // Binary search over node sequence offsets.
        const auto nodes = graph.nodes_table();
        std::size_t lo = 0, hi = nodes.size();
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (nodes[mid].seq_offset <= global) lo = mid;
            else hi = mid;
        }
        while (nodes[lo].seq_len == 0) ++lo;
        return GraphPosition{static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(global - nodes[lo].seq_offset)};
    };

    std::vector<SimulatedRead> reads;
    reads.reserve(params.read_count);
    for (std::size_t r = 0; r < params.read_count; ++r) {
        SimulatedRead read;
        for (int attempt = 0; read.origin.size() < params.read_length; ++attempt) {
            if (attempt > 1000) throw Error(ErrorCode::InvalidParameter, "no path long enough for the read length");
            read.origin.clear();
            GraphPosition pos = locate(any_base(rng));
            while (read.origin.size() < params.read_length) {
                read.origin.push_back(pos);
                if (pos.offset + 1 < graph.node_length(pos.node)) {
                    ++pos.offset;
                    continue;
                }
                const auto succ = graph.successors(pos.node);
                if (succ.empty()) break;
                std::uniform_int_distribution<std::size_t> pick(0, succ.size() - 1);
                pos = {succ[pick(rng)], 0};
            }
        }
        std::string seq;
        for (const auto& p : read.origin) seq += code_to_base(graph.base(p.node, p.offset));

        const auto edits = static_cast<std::size_t>(params.error_rate * static_cast<double>(seq.size()) + 0.5);
        std::uniform_int_distribution<int> kind(0, 2);
        std::uniform_int_distribution<int> base(0, 3);
        for (std::size_t e = 0; e < edits; ++e) {
            std::uniform_int_distribution<std::size_t> at(0, seq.size() - 1);
            const auto i = at(rng);
            switch (kind(rng)) {
            case 0: {
                char c = seq[i];
                while (c == seq[i]) c = kBases[base(rng)];
                seq[i] = c;
                break;
            }
            case 1: seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(i), kBases[base(rng)]); break;
            default: seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i)); break;
            }
        }
        read.edits = edits;
        read.sequence = std::move(seq);
        read.name = "sim" + std::to_string(r) + "_" + graph.name(read.origin.front().node) + "_" +
                    std::to_string(read.origin.front().offset);
        reads.push_back(std::move(read));
    }
    return reads;
}

} // namespace bitgraph
