#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bitgraph/bitalign.hpp"
#include "bitgraph/char_graph.hpp"
#include "bitgraph/gindex.hpp"
#include "bitgraph/graph.hpp"
#include "bitgraph/minseed.hpp"

namespace bitgraph {

struct MapperParams {
    MinimizerParams minimizers;
    double error_rate = 0.10;
    /// Edit threshold for graph alignment; negative selects ceil(E * read length).
    int max_edits = -1;
    TbOrdering ordering = TbOrdering::affine();
    /// Hop limit for the bounded adjacency rows; 0 disables the table.
    unsigned hop_limit = 0;
    HopPolicy hop_policy = HopPolicy::Software;
    unsigned threads = 1;
};

struct MappingRecord {
    std::string read_name;
    std::size_t read_length = 0;
    bool mapped = false;
    std::vector<std::uint32_t> path; ///< node ids in path order
    GraphPosition target_start;      ///< first aligned graph base
    GraphPosition target_end;        ///< last aligned graph base
    std::vector<GraphPosition> aligned; ///< graph base consumed by each M/S/D
    int distance = 0;
    Cigar cigar;
    std::size_t seed_count = 0;      ///< minimizers surviving the frequency filter
    std::size_t candidate_count = 0; ///< distinct subgraphs aligned
    std::string note;                ///< reason when unmapped
};

/// Seed-and-align pipeline: minimizers, frequency filter, index lookup, seed
/// regions, subgraph extraction and graph alignment per distinct candidate.
/// The reported record has the minimum distance; ties go to the leftmost
/// anchor (smallest node, then offset).
class Mapper {
public:
    Mapper(const GenomeGraph& graph, const MinimizerIndex& index, MapperParams params);

    MappingRecord map_read(const std::string& name, const std::string& sequence) const;

    /// Maps a batch on `params.threads` workers; output order equals input order.
    std::vector<MappingRecord> map_batch(const std::vector<std::pair<std::string, std::string>>& reads) const;

    const MapperParams& params() const noexcept { return params_; }

private:
    const GenomeGraph& graph_;
    const MinimizerIndex& index_;
    MapperParams params_;
};

/// Tab-separated record: name, length, query start, query end, strand, path
/// (">name>name"), start offset in the first node, end offset (exclusive) in
/// the last node, matches, alignment columns, then ed:i: (distance), sd:i:
/// (seeds), cd:i: (candidates) and cg:Z: (CIGAR). Unmapped reads print '*'
/// placeholders and an nt:Z: note.
std::string format_record(const MappingRecord& rec, const GenomeGraph& graph);

} // namespace bitgraph
