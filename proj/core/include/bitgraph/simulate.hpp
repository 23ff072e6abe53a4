#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bitgraph/char_graph.hpp"
#include "bitgraph/graph.hpp"

namespace bitgraph {

struct SimulatedRead {
    std::string name;
    std::string sequence;
    std::vector<GraphPosition> origin; ///< graph position of every sampled base, in path order
    std::size_t edits = 0;
};

struct SimulationParams {
    std::size_t read_count = 100;
    std::size_t read_length = 150;
    double error_rate = 0.0; ///< round(rate * length) edits, split evenly among S/I/D at random
    std::uint64_t seed = 1;
};

/// Seed from the BITGRAPH_SEED environment variable, or `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback);

/// Samples reads along random walks (uniform start base, uniform successor
/// choice) and applies random edits. Walks that hit a sink early restart.
/// Names have the form `sim<i>_<node name>_<offset>` for the first sampled base.
std::vector<SimulatedRead> simulate_reads(const GenomeGraph& graph, const SimulationParams& params);

} // namespace bitgraph
