#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitgraph/graph.hpp"

namespace bitgraph {

struct GraphPosition {
    std::uint32_t node = 0;
    std::uint32_t offset = 0;

    friend bool operator==(const GraphPosition&, const GraphPosition&) = default;
    friend auto operator<=>(const GraphPosition&, const GraphPosition&) = default;
};

/// Per-character linearisation of a DAG: one base code per character,
/// successor lists by character index (every successor index is larger than
/// its source), and the graph position each character came from.
class CharGraph {
public:
    CharGraph() = default;

    /// Builds from explicit successor lists. Throws InvalidParameter when a
    /// successor does not exceed its source index.
    static CharGraph from_lists(std::vector<std::uint8_t> chars, const std::vector<std::vector<std::uint32_t>>& succ,
                                std::vector<GraphPosition> origin = {});
    /// Path graph over `seq` (codes per base_to_code).
    static CharGraph linear(std::string_view seq);

    std::size_t size() const noexcept { return chars_.size(); }
    bool empty() const noexcept { return chars_.empty(); }
    std::uint8_t code(std::size_t i) const noexcept { return chars_[i]; }
    std::span<const std::uint8_t> codes() const noexcept { return chars_; }
    std::span<const std::uint32_t> successors(std::size_t i) const noexcept {
        return {succ_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    std::size_t edge_count() const noexcept { return succ_.size(); }
    const GraphPosition& origin(std::size_t i) const noexcept { return origin_[i]; }
    std::string decode() const;

    friend bool operator==(const CharGraph&, const CharGraph&) = default;

private:
    std::vector<std::uint8_t> chars_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<std::uint32_t> succ_;
    std::vector<GraphPosition> origin_;
};

/// All characters within `left_span` bases backward and `right_span` bases
/// forward of the anchor along any path (distance = shortest base count), in
/// global topological order. Throws AnchorOutOfRange.
CharGraph extract_subgraph(const GenomeGraph& graph, std::uint32_t anchor_node, std::uint32_t anchor_offset,
                           std::size_t left_span, std::size_t right_span);

/// Whole graph as one CharGraph.
CharGraph linearize(const GenomeGraph& graph);

enum class HopPolicy {
    Software,         ///< successors beyond the hop limit go to a far list
    HardwareFaithful, ///< successors beyond the hop limit raise HopOverflow
};

/// Bounded-span adjacency rows: bit h-1 of row i is set when i + h is a
/// successor of i (1 <= h <= hop_limit <= 64).
struct HopTable {
    unsigned hop_limit = 0;
    std::vector<std::uint64_t> rows;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> far; ///< (source, successor)

    /// Successors of i reconstructed from the row and the far list, ascending.
    std::vector<std::uint32_t> successors(std::uint32_t i) const;
};

HopTable build_hop_bits(const CharGraph& cg, unsigned hop_limit, HopPolicy policy = HopPolicy::Software);

/// Same characters and origins as `cg` with successors read from `hops`.
CharGraph with_hop_successors(const CharGraph& cg, const HopTable& hops);

} // namespace bitgraph
