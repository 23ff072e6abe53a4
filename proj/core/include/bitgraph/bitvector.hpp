#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#ifndef BITGRAPH_WORD_BITS
#define BITGRAPH_WORD_BITS 64
#endif

namespace bitgraph {

static_assert(BITGRAPH_WORD_BITS == 32 || BITGRAPH_WORD_BITS == 64, "word width must be 32 or 64");

using Word = std::conditional_t<BITGRAPH_WORD_BITS == 64, std::uint64_t, std::uint32_t>;
inline constexpr unsigned kWordBits = BITGRAPH_WORD_BITS;

constexpr std::size_t words_for_bits(std::size_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Mask of the valid bits in the most significant word of an m-bit vector.
constexpr Word top_word_mask(std::size_t bits) noexcept {
    const unsigned rem = static_cast<unsigned>(bits % kWordBits);
    return rem == 0 ? ~Word{0} : ((Word{1} << rem) - 1);
}

/// m-bit vector spread over ceil(m/w) words, least significant word first.
/// Bits at positions >= m are always zero.
class MultiWordBitvector {
public:
    MultiWordBitvector() = default;
    explicit MultiWordBitvector(std::size_t bits, bool fill = false);

    static MultiWordBitvector ones(std::size_t bits) { return MultiWordBitvector(bits, true); }
    static MultiWordBitvector zeros(std::size_t bits) { return MultiWordBitvector(bits, false); }
    /// Parses an MSB-first string of '0'/'1' characters ("0111" has bit 3 clear).
    static MultiWordBitvector from_string(std::string_view msb_first);
    static MultiWordBitvector from_words(std::span<const Word> words, std::size_t bits);

    std::size_t bit_length() const noexcept { return bits_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> mutable_words() noexcept { return words_; }

    bool test(std::size_t pos) const noexcept {
        return (words_[pos / kWordBits] >> (pos % kWordBits)) & Word{1};
    }
    void set(std::size_t pos, bool value = true) noexcept;
    bool msb() const noexcept { return bits_ != 0 && test(bits_ - 1); }
    bool all_ones() const noexcept;
    std::size_t count_zeros() const noexcept;

    MultiWordBitvector shifted_left() const;
    MultiWordBitvector& shift_left_in_place() noexcept;

    MultiWordBitvector& operator&=(const MultiWordBitvector& other) noexcept;
    MultiWordBitvector& operator|=(const MultiWordBitvector& other) noexcept;
    friend MultiWordBitvector operator&(MultiWordBitvector a, const MultiWordBitvector& b) noexcept { return a &= b; }
    friend MultiWordBitvector operator|(MultiWordBitvector a, const MultiWordBitvector& b) noexcept { return a |= b; }
    friend bool operator==(const MultiWordBitvector&, const MultiWordBitvector&) = default;

    std::string to_string() const; // MSB first

private:
    void canonicalize() noexcept;

    std::vector<Word> words_;
    std::size_t bits_ = 0;
};

namespace wordops {

// Raw word-span kernels used by the scanning engines. All spans have the same
// length; `top` is top_word_mask(m).

inline void copy(std::span<Word> dst, std::span<const Word> src) noexcept {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[i];
}

inline void fill_ones(std::span<Word> dst, Word top) noexcept {
    for (auto& w : dst) w = ~Word{0};
    dst.back() &= top;
}

/// dst = (src << 1), carry propagated from word i-1 into word i.
inline void shl1(std::span<Word> dst, std::span<const Word> src, Word top) noexcept {
    for (std::size_t i = dst.size(); i-- > 1;) {
        dst[i] = (src[i] << 1) | (src[i - 1] >> (kWordBits - 1));
    }
    dst[0] = src[0] << 1;
    dst.back() &= top;
}

/// dst = (src << 1) | mask
inline void shl1_or(std::span<Word> dst, std::span<const Word> src, std::span<const Word> mask, Word top) noexcept {
    for (std::size_t i = dst.size(); i-- > 1;) {
        dst[i] = ((src[i] << 1) | (src[i - 1] >> (kWordBits - 1))) | mask[i];
    }
    dst[0] = (src[0] << 1) | mask[0];
    dst.back() &= top;
}

/// dst &= (src << 1)
inline void and_shl1(std::span<Word> dst, std::span<const Word> src) noexcept {
    for (std::size_t i = dst.size(); i-- > 1;) {
        dst[i] &= (src[i] << 1) | (src[i - 1] >> (kWordBits - 1));
    }
    dst[0] &= src[0] << 1;
}

/// dst &= ((src << 1) | mask)
inline void and_shl1_or(std::span<Word> dst, std::span<const Word> src, std::span<const Word> mask) noexcept {
    for (std::size_t i = dst.size(); i-- > 1;) {
        dst[i] &= ((src[i] << 1) | (src[i - 1] >> (kWordBits - 1))) | mask[i];
    }
    dst[0] &= (src[0] << 1) | mask[0];
}

inline void and_with(std::span<Word> dst, std::span<const Word> src) noexcept {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

inline bool test(std::span<const Word> v, std::size_t pos) noexcept {
    return (v[pos / kWordBits] >> (pos % kWordBits)) & Word{1};
}

/// Bit `pos` of (v << 1), i.e. bit pos-1 of v; the shifted-in LSB is zero.
inline bool test_shl1(std::span<const Word> v, std::size_t pos) noexcept {
    return pos == 0 ? false : test(v, pos - 1);
}

} // namespace wordops

} // namespace bitgraph
