#include "bitgraph/bitvector.hpp"

#include <bit>

#include "bitgraph/errors.hpp"

namespace bitgraph {

MultiWordBitvector::MultiWordBitvector(std::size_t bits, bool fill)
    : words_(words_for_bits(bits), fill ? ~Word{0} : Word{0}), bits_(bits) {
    canonicalize();
}

MultiWordBitvector MultiWordBitvector::from_string(std::string_view msb_first) {
    MultiWordBitvector v(msb_first.size());
    const std::size_t m = msb_first.size();
    for (std::size_t i = 0; i < m; ++i) {
        const char c = msb_first[i];
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::InvalidParameter, "bit string may only contain 0 and 1");
        }
        if (c == '1') v.set(m - 1 - i);
    }
    return v;
}

MultiWordBitvector MultiWordBitvector::from_words(std::span<const Word> words, std::size_t bits) {
    MultiWordBitvector v(bits);
    for (std::size_t i = 0; i < v.words_.size() && i < words.size(); ++i) v.words_[i] = words[i];
    v.canonicalize();
    return v;
}

void MultiWordBitvector::set(std::size_t pos, bool value) noexcept {
    const Word bit = Word{1} << (pos % kWordBits);
    if (value) {
        words_[pos / kWordBits] |= bit;
    } else {
        words_[pos / kWordBits] &= ~bit;
    }
}

bool MultiWordBitvector::all_ones() const noexcept {
    for (std::size_t i = 0; i + 1 < words_.size(); ++i) {
        if (words_[i] != ~Word{0}) return false;
    }
    return words_.empty() || words_.back() == top_word_mask(bits_);
}

std::size_t MultiWordBitvector::count_zeros() const noexcept {
    std::size_t ones = 0;
    for (Word w : words_) ones += static_cast<std::size_t>(std::popcount(w));
    return bits_ - ones;
}

MultiWordBitvector MultiWordBitvector::shifted_left() const {
    MultiWordBitvector out(*this);
    out.shift_left_in_place();
    return out;
}

MultiWordBitvector& MultiWordBitvector::shift_left_in_place() noexcept {
    if (!words_.empty()) wordops::shl1(words_, words_, top_word_mask(bits_));
    return *this;
}

MultiWordBitvector& MultiWordBitvector::operator&=(const MultiWordBitvector& other) noexcept {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

MultiWordBitvector& MultiWordBitvector::operator|=(const MultiWordBitvector& other) noexcept {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    canonicalize();
    return *this;
}

std::string MultiWordBitvector::to_string() const {
    std::string out(bits_, '0');
    for (std::size_t i = 0; i < bits_; ++i) {
        if (test(bits_ - 1 - i)) out[i] = '1';
    }
    return out;
}

void MultiWordBitvector::canonicalize() noexcept {
    if (!words_.empty()) words_.back() &= top_word_mask(bits_);
}

} // namespace bitgraph
