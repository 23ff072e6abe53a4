#include "bitgraph/cigar.hpp"

#include <charconv>

#include "bitgraph/errors.hpp"
#include "bitgraph/sequence.hpp"

namespace bitgraph {

char edit_op_char(EditOp op, bool extended) noexcept {
    switch (op) {
    case EditOp::Match: return 'M';
    case EditOp::Subst: return extended ? 'X' : 'S';
    case EditOp::Ins: return 'I';
    case EditOp::Del: return 'D';
    }
    return '?';
}

Cigar Cigar::parse(std::string_view text) {
    Cigar cigar;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::uint32_t len = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), len);
        if (ec != std::errc{} || ptr == text.data() + text.size()) {
            throw Error(ErrorCode::MalformedRecord, "bad CIGAR '" + std::string(text) + "'");
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        EditOp op;
        switch (text[pos]) {
        case 'M':
        case '=': op = EditOp::Match; break;
        case 'S':
        case 'X': op = EditOp::Subst; break;
        case 'I': op = EditOp::Ins; break;
        case 'D': op = EditOp::Del; break;
        default: throw Error(ErrorCode::MalformedRecord, "bad CIGAR operation in '" + std::string(text) + "'");
        }
        ++pos;
        cigar.push(op, len);
    }
    return cigar;
}

void Cigar::push(EditOp op, std::uint32_t count) {
    if (count == 0) return;
    if (!runs_.empty() && runs_.back().op == op) {
        runs_.back().length += count;
    } else {
        runs_.push_back({op, count});
    }
}

void Cigar::append(const Cigar& other) {
    for (const auto& run : other.runs_) push(run.op, run.length);
}

std::size_t Cigar::count(EditOp op) const noexcept {
    std::size_t total = 0;
    for (const auto& run : runs_) {
        if (run.op == op) total += run.length;
    }
    return total;
}

std::size_t Cigar::edit_count() const noexcept {
    return count(EditOp::Subst) + count(EditOp::Ins) + count(EditOp::Del);
}

std::size_t Cigar::pattern_length() const noexcept {
    return count(EditOp::Match) + count(EditOp::Subst) + count(EditOp::Ins);
}

std::size_t Cigar::text_length() const noexcept {
    return count(EditOp::Match) + count(EditOp::Subst) + count(EditOp::Del);
}

std::string Cigar::to_string(bool extended) const {
    std::string out;
    for (const auto& run : runs_) {
        out += std::to_string(run.length);
        out += edit_op_char(run.op, extended);
    }
    return out;
}

bool cigar_reconstructs(const Cigar& cigar, std::span<const std::uint8_t> text,
                        std::span<const std::uint8_t> pattern) noexcept {
    std::size_t t = 0;
    std::size_t p = 0;
    for (const auto& run : cigar.runs()) {
        for (std::uint32_t r = 0; r < run.length; ++r) {
            switch (run.op) {
            case EditOp::Match:
                if (t >= text.size() || p >= pattern.size()) return false;
                if (text[t] != pattern[p] || text[t] >= kAmbiguousCode) return false;
                ++t;
                ++p;
                break;
            case EditOp::Subst:
                if (t >= text.size() || p >= pattern.size()) return false;
                if (text[t] == pattern[p] && text[t] < kAmbiguousCode) return false;
                ++t;
                ++p;
                break;
            case EditOp::Ins:
                if (p >= pattern.size()) return false;
                ++p;
                break;
            case EditOp::Del:
                if (t >= text.size()) return false;
                ++t;
                break;
            }
        }
    }
    return t == text.size() && p == pattern.size();
}

long score_alignment(const Cigar& cigar, const ScoringScheme& scheme) noexcept {
    long score = 0;
    for (const auto& run : cigar.runs()) {
        const long len = run.length;
        switch (run.op) {
        case EditOp::Match: score += len * scheme.match; break;
        case EditOp::Subst: score += len * scheme.substitution; break;
        case EditOp::Ins:
        case EditOp::Del: score += scheme.gap_open + len * scheme.gap_extend; break;
        }
    }
    return score;
}

} // namespace bitgraph
