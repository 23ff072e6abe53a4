#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bitgraph/char_graph.hpp"
#include "bitgraph/graph.hpp"
#include "oracle.hpp"
#include "random.hpp"

namespace testsupport {

/// Small pangenome-like DAG: a random backbone cut into segments of
/// `segment` bases, with a variant bubble between consecutive segments
/// (SNP, deletion of one base, or a short insertion) every time.
inline bitgraph::GenomeGraph toy_pangenome(std::mt19937_64& rng, std::size_t backbone, std::size_t segment = 60) {
    std::vector<std::string> seqs;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    const auto ref = random_dna(rng, backbone);
    std::uniform_int_distribution<int> kind(0, 2);
    std::vector<std::uint32_t> tails; // nodes that must link to the next backbone segment
    std::size_t pos = 0;
    while (pos < ref.size()) {
        const std::size_t len = std::min(segment, ref.size() - pos);
        const auto id = static_cast<std::uint32_t>(seqs.size());
        seqs.push_back(ref.substr(pos, len));
        for (auto t : tails) edges.emplace_back(t, id);
        tails = {id};
        pos += len;
        if (pos >= ref.size()) break;
        // Bubble replacing ref[pos] (SNP, deletion) or adding bases before it (insertion).
        const auto ref_node = static_cast<std::uint32_t>(seqs.size());
        switch (kind(rng)) {
        case 0: {
            seqs.push_back(ref.substr(pos, 1));
            seqs.push_back(std::string(1, other_base(rng, ref[pos])));
            edges.emplace_back(id, ref_node);
            edges.emplace_back(id, ref_node + 1);
            tails = {ref_node, ref_node + 1};
            ++pos;
            break;
        }
        case 1: {
            seqs.push_back(ref.substr(pos, 1));
            edges.emplace_back(id, ref_node);
            tails = {ref_node, id};
            ++pos;
            break;
        }
        default: {
            seqs.push_back(random_dna(rng, 1 + rng() % 4));
            edges.emplace_back(id, ref_node);
            tails = {ref_node, id};
            break;
        }
        }
    }
    return bitgraph::GenomeGraph::from_nodes(seqs, edges);
}

/// Random character DAG with out-degree at most `max_branch`; most
/// characters link to their neighbour, extra edges jump up to `max_hop`.
inline bitgraph::CharGraph random_char_dag(std::mt19937_64& rng, std::size_t n, unsigned max_branch = 3,
                                           std::size_t max_hop = 24) {
    const auto seq = random_dna(rng, n);
    std::vector<std::uint8_t> codes(n);
    for (std::size_t i = 0; i < n; ++i) codes[i] = static_cast<std::uint8_t>(std::string("ACGT").find(seq[i]));
    std::vector<std::vector<std::uint32_t>> succ(n);
    std::uniform_int_distribution<unsigned> extra(0, max_branch - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const bool link_next = rng() % 16 != 0;
        if (link_next) succ[i].push_back(static_cast<std::uint32_t>(i + 1));
        const unsigned want = extra(rng);
        for (unsigned e = 0; e < want && succ[i].size() < max_branch; ++e) {
            std::uniform_int_distribution<std::size_t> hop(2, max_hop);
            const std::size_t j = i + hop(rng);
            if (j < n && std::find(succ[i].begin(), succ[i].end(), j) == succ[i].end()) {
                succ[i].push_back(static_cast<std::uint32_t>(j));
            }
        }
    }
    return bitgraph::CharGraph::from_lists(std::move(codes), succ);
}

inline oracle::CharDag to_dag(const bitgraph::CharGraph& cg) {
    oracle::CharDag dag;
    dag.bases = cg.decode();
    dag.succ.resize(cg.size());
    for (std::size_t i = 0; i < cg.size(); ++i) {
        for (auto j : cg.successors(i)) dag.succ[i].push_back(j);
    }
    return dag;
}

/// Bases along a path of graph positions.
inline std::string path_bases(const bitgraph::GenomeGraph& g, const std::vector<bitgraph::GraphPosition>& path) {
    std::string out;
    for (const auto& p : path) out += "ACGT"[g.base(p.node, p.offset)];
    return out;
}

} // namespace testsupport
