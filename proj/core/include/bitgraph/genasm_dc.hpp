#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bitgraph/bitvector.hpp"
#include "bitgraph/pattern.hpp"
#include "bitgraph/sequence.hpp"

namespace bitgraph {

/// Which intermediate vectors a capturing scan persists per (text iteration, d).
/// Anything not stored is regenerated on demand: substitution as deletion << 1,
/// and, under MatchDel, insertion from the same iteration's R[d-1], which is
/// itself rebuilt from the stored match and deletion vectors one d at a time.
enum class StoredVectors : std::uint8_t {
    StatusOnly,  ///< R[d] only
    MatchInsDel, ///< 3 of 4
    MatchDel,    ///< 2 of 4
    All,         ///< match, substitution, insertion, deletion
};

constexpr unsigned stored_vector_count(StoredVectors s) noexcept {
    switch (s) {
    case StoredVectors::StatusOnly: return 1;
    case StoredVectors::MatchInsDel: return 3;
    case StoredVectors::MatchDel: return 2;
    case StoredVectors::All: return 4;
    }
    return 0;
}

struct DcParams {
    int k = 0;
    bool capture_intermediates = false;
    StoredVectors stored = StoredVectors::MatchDel;
};

enum class TraceVector : std::uint8_t { Match, Subst, Ins, Del, Status };

/// Intermediate bitvectors captured by a scan, addressed by text position i
/// (the scan's iteration index) and error count d. Position i == text_length()
/// is the virtual boundary past the end of the text.
class DcTrace {
public:
    std::size_t text_length() const noexcept { return n_; }
    std::size_t pattern_length() const noexcept { return m_; }
    int max_errors() const noexcept { return k_; }
    StoredVectors stored() const noexcept { return stored_; }

    /// Bit `pos` of the requested vector at (i, d); true means 1 (no match).
    bool bit(TraceVector which, std::size_t i, int d, std::size_t pos) const;

    /// Smallest d whose status MSB is 0 at iteration i, or -1.
    int min_distance_at(std::size_t i) const noexcept { return i < n_ ? first_zero_msb_[i] : -1; }

    /// Exact capture footprint: n * (k+1) * stored vectors * m bits.
    std::size_t stored_bits() const noexcept { return n_ * static_cast<std::size_t>(k_ + 1) * slots_ * m_; }
    std::size_t stored_bytes() const noexcept { return stored_bits() / 8; }

private:
    friend class DcScanner;

    std::span<const Word> slot(std::size_t i, int d, unsigned s) const noexcept {
        return {vectors_.data() + ((i * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(d)) * slots_ + s) * nw_, nw_};
    }
    bool status_bit(std::size_t i, int d, std::size_t pos) const;

    std::vector<Word> vectors_;
    std::vector<int> first_zero_msb_;
    std::vector<std::uint8_t> text_;
    PatternBitmasks masks_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t nw_ = 0;
    int k_ = 0;
    unsigned slots_ = 0;
    StoredVectors stored_ = StoredVectors::MatchDel;
};

struct DcResult {
    std::optional<std::size_t> start;
    std::optional<int> distance;
    std::optional<DcTrace> trace;

    friend bool operator==(const DcResult& a, const DcResult& b) noexcept {
        return a.start == b.start && a.distance == b.distance;
    }
};

/// Approximate matching scan. Walks the text from the last character to the
/// first and reports the minimum edit distance of the whole pattern against any
/// text substring together with the smallest start position achieving it.
/// `text` holds symbol codes; codes outside the mask alphabet never match.
DcResult dc_scan(std::span<const std::uint8_t> text, const PatternBitmasks& masks, const DcParams& params);
DcResult dc_scan(const EncodedSequence& text, const PatternBitmasks& masks, const DcParams& params);

/// Splits the text into sub-texts overlapping by m + k characters, scans them
/// independently (on up to `workers` threads) and merges. The result equals a
/// single dc_scan over the whole text.
DcResult dc_windows(const EncodedSequence& text, const EncodedSequence& pattern, int k, unsigned workers);

struct FilterDecision {
    bool accept = false;
    /// Semi-global distance found by the scan (computed past the threshold
    /// when rejecting).
    int distance = 0;
};

/// Pre-alignment filter: accept iff the scan distance of `read` against
/// `reference` is at most `threshold`.
FilterDecision filter_pair(const EncodedSequence& reference, const EncodedSequence& read, int threshold);

} // namespace bitgraph
