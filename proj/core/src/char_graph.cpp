#include "bitgraph/char_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "bitgraph/errors.hpp"
#include "bitgraph/sequence.hpp"

namespace bitgraph {

CharGraph CharGraph::from_lists(std::vector<std::uint8_t> chars, const std::vector<std::vector<std::uint32_t>>& succ,
                                std::vector<GraphPosition> origin) {
    if (succ.size() != chars.size()) throw Error(ErrorCode::InvalidParameter, "one successor list per character");
    if (origin.empty()) {
        origin.resize(chars.size());
        for (std::uint32_t i = 0; i < origin.size(); ++i) origin[i] = {0, i};
    }
    if (origin.size() != chars.size()) throw Error(ErrorCode::InvalidParameter, "one origin per character");
    CharGraph cg;
    cg.chars_ = std::move(chars);
    cg.origin_ = std::move(origin);
    cg.offsets_.assign(1, 0);
    for (std::size_t i = 0; i < succ.size(); ++i) {
        auto sorted = succ[i];
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (auto j : sorted) {
            if (j <= i || j >= succ.size()) {
                throw Error(ErrorCode::InvalidParameter, "successor " + std::to_string(j) + " of character " +
                                                             std::to_string(i) + " breaks topological order");
            }
            cg.succ_.push_back(j);
        }
        cg.offsets_.push_back(static_cast<std::uint32_t>(cg.succ_.size()));
    }
    return cg;
}

CharGraph CharGraph::linear(std::string_view seq) {
    std::vector<std::uint8_t> chars(seq.size());
    std::vector<std::vector<std::uint32_t>> succ(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        chars[i] = base_to_code(seq[i]);
        if (i + 1 < seq.size()) succ[i] = {static_cast<std::uint32_t>(i + 1)};
    }
    return from_lists(std::move(chars), succ);
}

std::string CharGraph::decode() const {
    std::string out(chars_.size(), 'A');
    for (std::size_t i = 0; i < chars_.size(); ++i) out[i] = code_to_base(chars_[i]);
    return out;
}

namespace {

struct Range {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0; // inclusive
};

void include(std::map<std::uint32_t, Range>& ranges, std::uint32_t node, std::uint32_t lo, std::uint32_t hi) {
    auto [it, inserted] = ranges.try_emplace(node, Range{lo, hi});
    if (!inserted) {
        it->second.lo = std::min(it->second.lo, lo);
        it->second.hi = std::max(it->second.hi, hi);
    }
}

CharGraph assemble(const GenomeGraph& graph, const std::map<std::uint32_t, Range>& ranges) {
    // Character index of (node, offset) = base index of the node + offset - lo.
    std::map<std::uint32_t, std::uint32_t> first_index;
    std::uint32_t total = 0;
    for (const auto& [node, r] : ranges) {
        first_index[node] = total;
        total += r.hi - r.lo + 1;
    }
    std::vector<std::uint8_t> chars;
    std::vector<GraphPosition> origin;
    std::vector<std::vector<std::uint32_t>> succ(total);
    chars.reserve(total);
    origin.reserve(total);
    for (const auto& [node, r] : ranges) {
        const auto base = first_index[node];
        for (std::uint32_t o = r.lo; o <= r.hi; ++o) {
            chars.push_back(graph.base(node, o));
            origin.push_back({node, o});
            const auto idx = base + (o - r.lo);
            if (o < r.hi) {
                succ[idx].push_back(idx + 1);
            } else if (o + 1 == graph.node_length(node)) {
                for (auto v : graph.successors(node)) {
                    const auto it = ranges.find(v);
                    if (it != ranges.end() && it->second.lo == 0) succ[idx].push_back(first_index[v]);
                }
            }
        }
    }
    return CharGraph::from_lists(std::move(chars), succ, std::move(origin));
}

} // namespace

CharGraph extract_subgraph(const GenomeGraph& graph, std::uint32_t anchor_node, std::uint32_t anchor_offset,
                           std::size_t left_span, std::size_t right_span) {
    if (anchor_node >= graph.node_count() || anchor_offset >= graph.node_length(anchor_node)) {
        throw Error(ErrorCode::AnchorOutOfRange, "anchor (" + std::to_string(anchor_node) + ", " +
                                                     std::to_string(anchor_offset) + ") is outside the graph");
    }
    std::map<std::uint32_t, Range> ranges;

    // Forward: distance of each reached node's first character. Popping ids in
    // ascending order finalises a node only after all its predecessors.
    {
        std::map<std::uint32_t, std::size_t> dist;
        const std::size_t len = graph.node_length(anchor_node);
        const std::size_t last = std::min<std::size_t>(len - 1, anchor_offset + right_span);
        include(ranges, anchor_node, anchor_offset, static_cast<std::uint32_t>(last));
        if (last == len - 1) {
            const std::size_t next = len - anchor_offset; // distance of successors' first character
            for (auto v : graph.successors(anchor_node)) {
                if (next <= right_span) dist.try_emplace(v, next);
            }
        }
        while (!dist.empty()) {
            const auto [node, d] = *dist.begin();
            dist.erase(dist.begin());
            const std::size_t nlen = graph.node_length(node);
            const std::size_t hi = std::min(nlen - 1, right_span - d);
            include(ranges, node, 0, static_cast<std::uint32_t>(hi));
            if (hi == nlen - 1 && d + nlen <= right_span) {
                for (auto v : graph.successors(node)) {
                    auto [it, inserted] = dist.try_emplace(v, d + nlen);
                    if (!inserted) it->second = std::min(it->second, d + nlen);
                }
            }
        }
    }

    // Backward: distance of each reached node's last character, ids descending.
    {
        std::map<std::uint32_t, std::size_t, std::greater<>> dist;
        const std::size_t first = anchor_offset >= left_span ? anchor_offset - left_span : 0;
        if (anchor_offset > 0 && left_span > 0) {
            include(ranges, anchor_node, static_cast<std::uint32_t>(first), anchor_offset - 1);
        }
        if (first == 0 && anchor_offset + 1 <= left_span) {
            for (auto u : graph.predecessors(anchor_node)) dist.try_emplace(u, anchor_offset + 1);
        }
        while (!dist.empty()) {
            const auto [node, d] = *dist.begin();
            dist.erase(dist.begin());
            const std::size_t nlen = graph.node_length(node);
            const std::size_t reach = left_span - d; // extra characters before the last one
            const std::size_t lo = reach >= nlen - 1 ? 0 : nlen - 1 - reach;
            include(ranges, node, static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(nlen - 1));
            if (lo == 0 && d + nlen <= left_span) {
                for (auto u : graph.predecessors(node)) {
                    auto [it, inserted] = dist.try_emplace(u, d + nlen);
                    if (!inserted) it->second = std::min(it->second, d + nlen);
                }
            }
        }
    }
    return assemble(graph, ranges);
}

CharGraph linearize(const GenomeGraph& graph) {
    std::map<std::uint32_t, Range> ranges;
    for (std::uint32_t i = 0; i < graph.node_count(); ++i) {
        if (graph.node_length(i) > 0) ranges[i] = {0, graph.node_length(i) - 1};
    }
    return assemble(graph, ranges);
}

std::vector<std::uint32_t> HopTable::successors(std::uint32_t i) const {
    std::vector<std::uint32_t> out;
    for (unsigned h = 1; h <= hop_limit; ++h) {
        if ((rows[i] >> (h - 1)) & 1u) out.push_back(i + h);
    }
    const auto lo = std::lower_bound(far.begin(), far.end(), std::pair<std::uint32_t, std::uint32_t>{i, 0});
    for (auto it = lo; it != far.end() && it->first == i; ++it) out.push_back(it->second);
    std::sort(out.begin(), out.end());
    return out;
}

HopTable build_hop_bits(const CharGraph& cg, unsigned hop_limit, HopPolicy policy) {
    if (hop_limit == 0 || hop_limit > 64) throw Error(ErrorCode::InvalidParameter, "hop limit must be in 1..64");
    HopTable t;
    t.hop_limit = hop_limit;
    t.rows.assign(cg.size(), 0);
    for (std::uint32_t i = 0; i < cg.size(); ++i) {
        for (auto j : cg.successors(i)) {
            const std::uint32_t h = j - i;
            if (h <= hop_limit) {
                t.rows[i] |= std::uint64_t{1} << (h - 1);
            } else if (policy == HopPolicy::HardwareFaithful) {
                throw Error(ErrorCode::HopOverflow, "edge " + std::to_string(i) + " -> " + std::to_string(j) + " spans " +
                                                        std::to_string(h) + " positions, limit " +
                                                        std::to_string(hop_limit));
            } else {
                t.far.emplace_back(i, j);
            }
        }
    }
    return t;
}

CharGraph with_hop_successors(const CharGraph& cg, const HopTable& hops) {
    std::vector<std::uint8_t> chars(cg.codes().begin(), cg.codes().end());
    std::vector<std::vector<std::uint32_t>> succ(cg.size());
    std::vector<GraphPosition> origin(cg.size());
    for (std::uint32_t i = 0; i < cg.size(); ++i) {
        succ[i] = hops.successors(i);
        origin[i] = cg.origin(i);
    }
    return CharGraph::from_lists(std::move(chars), succ, std::move(origin));
}

} // namespace bitgraph
