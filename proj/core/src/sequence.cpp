#include "bitgraph/sequence.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "bitgraph/errors.hpp"

namespace bitgraph {

namespace {

constexpr std::size_t kBasesPerWord = 32;

constexpr std::array<std::uint8_t, 256> make_base_table() {
    std::array<std::uint8_t, 256> t{};
    for (auto& v : t) v = kAmbiguousCode;
    t['A'] = t['a'] = 0;
    t['C'] = t['c'] = 1;
    t['G'] = t['g'] = 2;
    t['T'] = t['t'] = 3;
    return t;
}

constexpr auto kBaseTable = make_base_table();

} // namespace

std::uint8_t base_to_code(char c) noexcept { return kBaseTable[static_cast<unsigned char>(c)]; }

char code_to_base(std::uint8_t code) noexcept {
    constexpr char bases[] = {'A', 'C', 'G', 'T'};
    return code < 4 ? bases[code] : 'N';
}

EncodedSequence EncodedSequence::encode(std::string_view raw, EncodeMode mode) {
    EncodedSequence seq;
    seq.length_ = raw.size();
    seq.packed_.assign((raw.size() + kBasesPerWord - 1) / kBasesPerWord, 0);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        std::uint8_t code = base_to_code(raw[i]);
        if (code == kAmbiguousCode) {
            if (mode == EncodeMode::Strict) {
                throw Error(ErrorCode::InvalidCharacter,
                            "character '" + std::string(1, raw[i]) + "' at position " + std::to_string(i));
            }
            if (seq.ambiguous_.empty()) seq.ambiguous_.assign((raw.size() + 63) / 64, 0);
            seq.ambiguous_[i / 64] |= std::uint64_t{1} << (i % 64);
            ++seq.ambiguous_count_;
            code = 0;
        }
        seq.packed_[i / kBasesPerWord] |= std::uint64_t{code} << (2 * (i % kBasesPerWord));
    }
    return seq;
}

EncodedSequence EncodedSequence::from_codes(std::span<const std::uint8_t> codes) {
    std::string raw(codes.size(), 'N');
    for (std::size_t i = 0; i < codes.size(); ++i) raw[i] = code_to_base(codes[i]);
    return encode(raw, EncodeMode::Lenient);
}

bool EncodedSequence::is_ambiguous(std::size_t i) const noexcept {
    return ambiguous_count_ != 0 && ((ambiguous_[i / 64] >> (i % 64)) & 1U);
}

std::uint8_t EncodedSequence::code(std::size_t i) const noexcept {
    if (is_ambiguous(i)) return kAmbiguousCode;
    return static_cast<std::uint8_t>((packed_[i / kBasesPerWord] >> (2 * (i % kBasesPerWord))) & 3U);
}

std::vector<std::uint8_t> EncodedSequence::codes() const {
    std::vector<std::uint8_t> out(length_);
    for (std::size_t i = 0; i < length_; ++i) out[i] = code(i);
    return out;
}

std::string EncodedSequence::decode() const {
    std::string out(length_, 'N');
    for (std::size_t i = 0; i < length_; ++i) out[i] = code_to_base(code(i));
    return out;
}

EncodedSequence EncodedSequence::subsequence(std::size_t pos, std::size_t len) const {
    pos = std::min(pos, length_);
    len = std::min(len, length_ - pos);
    std::vector<std::uint8_t> sub(len);
    for (std::size_t i = 0; i < len; ++i) sub[i] = code(pos + i);
    return from_codes(sub);
}

Alphabet::Alphabet(std::string symbols, bool case_sensitive) : symbols_(std::move(symbols)) {
    if (symbols_.empty() || symbols_.size() > 255) {
        throw Error(ErrorCode::InvalidParameter, "alphabet must hold 1..255 symbols");
    }
    std::fill(std::begin(table_), std::end(table_), static_cast<std::uint8_t>(symbols_.size()));
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto c = static_cast<unsigned char>(symbols_[i]);
        table_[c] = static_cast<std::uint8_t>(i);
        if (!case_sensitive) {
            table_[static_cast<unsigned char>(std::tolower(c))] = static_cast<std::uint8_t>(i);
            table_[static_cast<unsigned char>(std::toupper(c))] = static_cast<std::uint8_t>(i);
        }
    }
}

const Alphabet& Alphabet::dna() {
    static const Alphabet alphabet("ACGT");
    return alphabet;
}

char Alphabet::symbol(std::uint8_t code) const noexcept {
    return code < symbols_.size() ? symbols_[code] : '?';
}

std::vector<std::uint8_t> Alphabet::encode(std::string_view text) const {
    std::vector<std::uint8_t> out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) out[i] = code(text[i]);
    return out;
}

} // namespace bitgraph
