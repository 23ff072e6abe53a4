#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bitgraph {

/// M consumes one pattern and one text character that are equal, S one of each
/// that differ, I a pattern character only, D a text character only.
enum class EditOp : std::uint8_t { Match, Subst, Ins, Del };

char edit_op_char(EditOp op, bool extended = false) noexcept;

struct CigarRun {
    EditOp op;
    std::uint32_t length;
    friend bool operator==(const CigarRun&, const CigarRun&) = default;
};

/// Run-length edit script, rendered as e.g. "4M1I3M".
class Cigar {
public:
    Cigar() = default;

    /// Accepts M/S/X/=/I/D operation letters (X and = map to S and M).
    static Cigar parse(std::string_view text);

    void push(EditOp op, std::uint32_t count = 1);
    void append(const Cigar& other);
    void clear() noexcept { runs_.clear(); }

    std::span<const CigarRun> runs() const noexcept { return runs_; }
    bool empty() const noexcept { return runs_.empty(); }

    std::size_t count(EditOp op) const noexcept;
    std::size_t edit_count() const noexcept;
    std::size_t pattern_length() const noexcept;
    std::size_t text_length() const noexcept;

    /// With `extended`, substitutions render as 'X' (SAM extended CIGAR).
    std::string to_string(bool extended = false) const;

    friend bool operator==(const Cigar&, const Cigar&) = default;

private:
    std::vector<CigarRun> runs_;
};

/// True iff applying the script to `text` yields `pattern`: every M pairs equal
/// symbols, every S pairs different ones, and both sequences are consumed
/// exactly.
bool cigar_reconstructs(const Cigar& cigar, std::span<const std::uint8_t> text,
                        std::span<const std::uint8_t> pattern) noexcept;

/// Signed scores; a gap of length L costs gap_open + L * gap_extend.
struct ScoringScheme {
    int match = 1;
    int substitution = -4;
    int gap_open = -6;
    int gap_extend = -1;

    static ScoringScheme bwa_mem() { return {1, -4, -6, -1}; }
    static ScoringScheme minimap2() { return {2, -4, -4, -2}; }
};

long score_alignment(const Cigar& cigar, const ScoringScheme& scheme) noexcept;

} // namespace bitgraph
