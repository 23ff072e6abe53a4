#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bitgraph {

/// Symbol code reserved for positions that match nothing (ambiguity codes in
/// lenient mode). Every pattern bitmask holds a 1 for it.
inline constexpr std::uint8_t kAmbiguousCode = 4;

enum class EncodeMode {
    Lenient, ///< non-ACGT characters become always-mismatch positions
    Strict,  ///< non-ACGT characters raise InvalidCharacter
};

/// 2-bit packed DNA sequence: A=00, C=01, G=10, T=11, 32 bases per 64-bit word
/// with base i stored at bits 2*(i%32). Ambiguous positions are tracked in a
/// side bitset and decode as 'N'.
class EncodedSequence {
public:
    EncodedSequence() = default;

    static EncodedSequence encode(std::string_view raw, EncodeMode mode = EncodeMode::Lenient);
    static EncodedSequence from_codes(std::span<const std::uint8_t> codes);

    std::size_t size() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }

    /// 0..3 for A/C/G/T, kAmbiguousCode for flagged positions.
    std::uint8_t code(std::size_t i) const noexcept;
    bool is_ambiguous(std::size_t i) const noexcept;
    bool has_ambiguous() const noexcept { return ambiguous_count_ != 0; }

    std::vector<std::uint8_t> codes() const;
    std::string decode() const;
    EncodedSequence subsequence(std::size_t pos, std::size_t len) const;

    std::span<const std::uint64_t> packed_words() const noexcept { return packed_; }

    friend bool operator==(const EncodedSequence&, const EncodedSequence&) = default;

private:
    std::vector<std::uint64_t> packed_;
    std::vector<std::uint64_t> ambiguous_;
    std::size_t length_ = 0;
    std::size_t ambiguous_count_ = 0;
};

std::uint8_t base_to_code(char c) noexcept; // 0..3, or kAmbiguousCode
char code_to_base(std::uint8_t code) noexcept;

/// Generic symbol alphabet for non-DNA text search. Codes are the symbol's
/// index in `symbols`; characters outside the alphabet map to `size()`, which
/// never matches.
class Alphabet {
public:
    explicit Alphabet(std::string symbols, bool case_sensitive = false);

    static const Alphabet& dna();

    std::size_t size() const noexcept { return symbols_.size(); }
    std::uint8_t code(char c) const noexcept { return table_[static_cast<unsigned char>(c)]; }
    char symbol(std::uint8_t code) const noexcept;
    const std::string& symbols() const noexcept { return symbols_; }

    std::vector<std::uint8_t> encode(std::string_view text) const;

private:
    std::string symbols_;
    std::uint8_t table_[256];
};

} // namespace bitgraph
