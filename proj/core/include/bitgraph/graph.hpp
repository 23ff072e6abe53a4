#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bitgraph {

inline constexpr std::uint32_t kMaxNodeLength = 16384;

/// 32-byte node record. `seq_offset` counts bases into the sequences table,
/// `edges_offset` entries into the edges table.
struct NodeRecord {
    std::uint32_t seq_len = 0;
    std::uint32_t out_degree = 0;
    std::uint64_t seq_offset = 0;
    std::uint64_t edges_offset = 0;
    std::uint64_t reserved = 0;

    friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};
static_assert(sizeof(NodeRecord) == 32);

/// Node-level genome graph in three tables: node records, 2-bit packed
/// sequences, and 4-byte successor ids. Node ids are dense and topologically
/// sorted (every edge u -> v has u < v).
class GenomeGraph {
public:
    GenomeGraph() = default;

    /// Builds from node sequences (ACGT only) and edges over the given ids.
    /// Throws CyclicGraph unless every edge goes from a smaller to a larger id.
    static GenomeGraph from_nodes(const std::vector<std::string>& sequences,
                                  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
                                  std::vector<std::string> names = {});

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t total_bases() const noexcept { return total_bases_; }

    const NodeRecord& node(std::uint32_t id) const { return nodes_.at(id); }
    std::uint32_t node_length(std::uint32_t id) const { return nodes_.at(id).seq_len; }
    std::uint8_t base(std::uint32_t id, std::uint32_t offset) const noexcept;
    std::string node_sequence(std::uint32_t id) const;
    std::span<const std::uint32_t> successors(std::uint32_t id) const noexcept;
    std::span<const std::uint32_t> predecessors(std::uint32_t id) const noexcept;
    const std::string& name(std::uint32_t id) const { return names_.at(id); }
    std::optional<std::uint32_t> find_node(std::string_view name) const;

    std::span<const NodeRecord> nodes_table() const noexcept { return nodes_; }
    std::span<const std::uint64_t> sequences_table() const noexcept { return packed_; }
    std::span<const std::uint32_t> edges_table() const noexcept { return edges_; }

    friend bool operator==(const GenomeGraph& a, const GenomeGraph& b) noexcept {
        return a.nodes_ == b.nodes_ && a.packed_ == b.packed_ && a.edges_ == b.edges_ && a.names_ == b.names_;
    }

private:
    void build_predecessors();

    std::vector<NodeRecord> nodes_;
    std::vector<std::uint64_t> packed_;
    std::vector<std::uint32_t> edges_;
    std::vector<std::string> names_;
    std::size_t total_bases_ = 0;
    std::vector<std::uint32_t> pred_offsets_;
    std::vector<std::uint32_t> preds_;

    friend GenomeGraph read_graph_binary(std::istream&);
};

/// Reads `S` and `L` records (GFA 1). Other record types are ignored. Links
/// must be +/+ with a zero or absent overlap. Node ids are reassigned in a
/// topological order that keeps the input order whenever it already is one.
/// Errors: MalformedRecord (message carries source:line), UnsupportedOrientation,
/// CyclicGraph.
GenomeGraph parse_gfa(std::istream& in, std::string_view source = "<gfa>");
GenomeGraph load_gfa(const std::string& path);
void write_gfa(std::ostream& out, const GenomeGraph& graph);

/// Little-endian binary form: "BGGR" magic, u16 version, u16 zero, then u64
/// node/base/edge counts, node records, packed sequence words, edge ids and a
/// names section (u32 length + bytes per node).
void write_graph_binary(std::ostream& out, const GenomeGraph& graph);
GenomeGraph read_graph_binary(std::istream& in);

inline constexpr std::uint16_t kGraphFormatVersion = 1;

} // namespace bitgraph
