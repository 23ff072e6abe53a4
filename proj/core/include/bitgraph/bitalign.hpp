#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bitgraph/char_graph.hpp"
#include "bitgraph/cigar.hpp"
#include "bitgraph/genasm_tb.hpp"
#include "bitgraph/pattern.hpp"
#include "bitgraph/sequence.hpp"

namespace bitgraph {

/// k+1 status vectors per character, the only state kept between the distance
/// pass and traceback. Everything else is regenerated from these.
class GraphDcState {
public:
    std::size_t char_count() const noexcept { return n_; }
    std::size_t pattern_length() const noexcept { return m_; }
    int max_errors() const noexcept { return k_; }
    const PatternBitmasks& masks() const noexcept { return masks_; }

    /// R[d] of character i; i == char_count() addresses the boundary past sinks.
    std::span<const Word> status(std::size_t i, int d) const noexcept;
    bool status_bit(std::size_t i, int d, std::size_t pos) const noexcept;

    std::optional<std::uint32_t> best_start;
    std::optional<int> best_distance;

    /// Bits actually stored: (k+1) * m per character.
    std::size_t state_bits() const noexcept { return n_ * static_cast<std::size_t>(k_ + 1) * m_; }
    /// Bits a per-edge M/I/D store would need: 3 * (k+1) * m for every
    /// (character, successor) pair, counting the boundary as a sink's successor.
    std::size_t per_edge_bits() const noexcept { return per_edge_slots_ * 3 * static_cast<std::size_t>(k_ + 1) * m_; }

private:
    friend GraphDcState graph_dc(const CharGraph&, const PatternBitmasks&, int);

    std::vector<Word> all_r_;
    std::vector<Word> boundary_;
    PatternBitmasks masks_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t nw_ = 0;
    int k_ = 0;
    std::size_t per_edge_slots_ = 0;
};

/// Distance pass over a topologically ordered character graph, last character
/// first. The best match is the smallest d with a zero MSB over all
/// characters, ties broken by the smallest character index.
GraphDcState graph_dc(const CharGraph& cg, const PatternBitmasks& masks, int k);

struct GraphAlignment {
    std::uint32_t start_char = 0;
    std::vector<std::uint32_t> path; ///< characters consumed by M, S or D, in order
    int distance = 0;
    Cigar cigar;
};

/// Walks from (start, edit_distance) emitting one operation per step. At each
/// step the match/substitution/deletion tests are rebuilt from each
/// successor's stored vectors and insertion from the current character's.
/// Choice: ordering class first, then ascending successor index.
GraphAlignment graph_traceback(const GraphDcState& state, const CharGraph& cg, std::uint32_t start, int edit_distance,
                               const TbOrdering& ordering = TbOrdering::affine());

/// Mask generation, distance pass and traceback. Throws NoAlignmentWithinK.
GraphAlignment align_to_graph(const CharGraph& cg, const EncodedSequence& pattern, int k,
                              const TbOrdering& ordering = TbOrdering::affine());

} // namespace bitgraph
