#include "bitgraph/pattern.hpp"

#include "bitgraph/errors.hpp"

namespace bitgraph {

PatternBitmasks generate_pattern_bitmasks(std::span<const std::uint8_t> pattern_codes, std::size_t alphabet_size) {
    if (pattern_codes.empty()) throw Error(ErrorCode::EmptyPattern, "pattern has no characters");
    if (alphabet_size == 0) throw Error(ErrorCode::InvalidParameter, "alphabet is empty");

    PatternBitmasks pm;
    pm.m_ = pattern_codes.size();
    pm.sigma_ = alphabet_size;
    pm.nw_ = words_for_bits(pm.m_);
    pm.flat_.assign((alphabet_size + 1) * pm.nw_, ~Word{0});

    const Word top = top_word_mask(pm.m_);
    for (std::size_t s = 0; s <= alphabet_size; ++s) pm.flat_[s * pm.nw_ + pm.nw_ - 1] &= top;

    for (std::size_t i = 0; i < pm.m_; ++i) {
        const std::uint8_t c = pattern_codes[i];
        if (c >= alphabet_size) continue;
        const std::size_t pos = pattern_bit(pm.m_, i);
        pm.flat_[c * pm.nw_ + pos / kWordBits] &= ~(Word{1} << (pos % kWordBits));
    }
    return pm;
}

PatternBitmasks generate_pattern_bitmasks(const EncodedSequence& pattern) {
    const auto codes = pattern.codes();
    return generate_pattern_bitmasks(codes, 4);
}

} // namespace bitgraph
