#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bitgraph/bitvector.hpp"
#include "bitgraph/sequence.hpp"

namespace bitgraph {

/// Bit position holding pattern index `i` in an m-bit status or mask vector.
/// Pattern index 0 sits at the MSB (position m-1), so a zero MSB in a status
/// vector reports a complete match.
constexpr std::size_t pattern_bit(std::size_t m, std::size_t i) noexcept { return m - 1 - i; }

/// One m-bit mask per alphabet symbol: bit for pattern position i is 0 iff
/// pattern[i] is that symbol. Codes at or beyond `alphabet_size()` (ambiguous
/// text characters) resolve to an all-ones mask.
class PatternBitmasks {
public:
    PatternBitmasks() = default;

    std::size_t pattern_length() const noexcept { return m_; }
    std::size_t alphabet_size() const noexcept { return sigma_; }
    std::size_t word_count() const noexcept { return nw_; }

    std::span<const Word> mask_words(std::uint8_t code) const noexcept {
        const std::size_t slot = code < sigma_ ? code : sigma_;
        return {flat_.data() + slot * nw_, nw_};
    }
    MultiWordBitvector mask(std::uint8_t code) const {
        return MultiWordBitvector::from_words(mask_words(code), m_);
    }

private:
    friend PatternBitmasks generate_pattern_bitmasks(std::span<const std::uint8_t>, std::size_t);

    std::vector<Word> flat_; // (sigma + 1) masks; the last one is all ones
    std::size_t m_ = 0;
    std::size_t sigma_ = 0;
    std::size_t nw_ = 0;
};

/// Builds masks for an arbitrary alphabet of `alphabet_size` symbols from
/// symbol codes. Pattern codes >= alphabet_size never match anything.
/// Throws EmptyPattern for an empty pattern.
PatternBitmasks generate_pattern_bitmasks(std::span<const std::uint8_t> pattern_codes, std::size_t alphabet_size);

/// DNA convenience overload (alphabet ACGT).
PatternBitmasks generate_pattern_bitmasks(const EncodedSequence& pattern);

} // namespace bitgraph
