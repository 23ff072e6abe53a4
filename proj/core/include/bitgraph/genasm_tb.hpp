#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "bitgraph/cigar.hpp"
#include "bitgraph/genasm_dc.hpp"
#include "bitgraph/sequence.hpp"

namespace bitgraph {

/// Order in which traceback tests the four cases at each step. With
/// `extend_gaps_first`, a gap of the same type as the previous emission is
/// extended before anything else is considered (affine-gap mimicry). Match is
/// always tested before substitution.
struct TbOrdering {
    std::array<EditOp, 4> priority{EditOp::Match, EditOp::Subst, EditOp::Ins, EditOp::Del};
    bool extend_gaps_first = false;

    /// Match, substitution, insertion, deletion with gap extension first.
    static TbOrdering affine();
    /// Match, then substitution, deletion, insertion.
    static TbOrdering sdi();

    /// "affine", or a permutation of the error letters s/i/d, optionally with
    /// an 'm' (which must precede 's') and an "affine-" prefix, e.g. "ids",
    /// "msid", "affine-ids".
    static TbOrdering parse(std::string_view spec);
    std::string name() const;

    friend bool operator==(const TbOrdering&, const TbOrdering&) = default;
};

struct TbParams {
    std::size_t window = 64;
    std::size_t overlap = 24;
    /// Edit threshold for each window's scan; negative selects window - 1.
    /// A threshold near window * error_rate fails most windows, because a
    /// window's pattern tail overhangs its text whenever indels drift.
    int per_window_k = -1;
    /// Threshold for locating the alignment start; negative selects
    /// ceil(error_rate * pattern length).
    int max_edits = -1;
    double error_rate = 0.10;
    TbOrdering ordering = TbOrdering::affine();
    StoredVectors stored = StoredVectors::MatchDel;

    /// W=60, k=15 per window, match+deletion capture.
    static TbParams hardware_preset();

    int effective_window_k() const;
    void validate() const;
};

/// Traceback position inside one window. `pattern_bit` is the bit position of
/// the zero being followed (window pattern index 0 is the MSB); -1 once the
/// window's pattern is exhausted.
struct TbCursor {
    int pattern_bit = 0;
    std::size_t text_index = 0;
    int errors_left = 0;
    std::size_t pattern_consumed = 0;
    std::size_t text_consumed = 0;
};

struct WindowTraceback {
    Cigar cigar;
    TbCursor cursor;
};

/// Follows the chain of zeros through one window's captured vectors starting
/// at `start`, emitting one operation per step in the configured priority.
/// Stops once `consume_limit` text or pattern characters are consumed or the
/// window pattern is exhausted. Throws DeadEnd if no vector holds the zero.
WindowTraceback traceback_window(const DcTrace& trace, TbCursor start, const TbOrdering& ordering,
                                 std::size_t consume_limit);

struct Alignment {
    std::size_t start = 0;      ///< first aligned text position
    std::size_t text_span = 0;  ///< text characters covered by the CIGAR
    int distance = 0;           ///< edits in the CIGAR
    Cigar cigar;
    std::size_t windows = 0;
};

/// Windowed traceback over the whole pattern: locates the best start with a
/// scan, then repeatedly scans a W x W window with capture on and traces it
/// back, advancing by the consumed counts. Throws WindowFailure when a window
/// has no match within its threshold and ZeroProgress if a window consumes
/// nothing.
Alignment align_windowed(const EncodedSequence& text, const EncodedSequence& pattern, const TbParams& params);

} // namespace bitgraph
