#include "bitgraph/genasm_tb.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>

#include "bitgraph/errors.hpp"

namespace bitgraph {

TbOrdering TbOrdering::affine() { return TbOrdering{{EditOp::Match, EditOp::Subst, EditOp::Ins, EditOp::Del}, true}; }

TbOrdering TbOrdering::sdi() { return TbOrdering{{EditOp::Match, EditOp::Subst, EditOp::Del, EditOp::Ins}, false}; }

TbOrdering TbOrdering::parse(std::string_view spec) {
    if (spec == "affine") return affine();
    TbOrdering ordering;
    constexpr std::string_view kAffinePrefix = "affine-";
    if (spec.starts_with(kAffinePrefix)) {
        ordering.extend_gaps_first = true;
        spec.remove_prefix(kAffinePrefix.size());
    }
    std::string letters(spec);
    if (letters.find('m') == std::string::npos) letters.insert(letters.begin(), 'm');
    if (letters.size() != 4) throw Error(ErrorCode::InvalidParameter, "ordering must name s, i and d once each");
    bool seen[4] = {false, false, false, false};
    for (std::size_t i = 0; i < 4; ++i) {
        EditOp op;
        switch (letters[i]) {
        case 'm': op = EditOp::Match; break;
        case 's': op = EditOp::Subst; break;
        case 'i': op = EditOp::Ins; break;
        case 'd': op = EditOp::Del; break;
        default: throw Error(ErrorCode::InvalidParameter, "unknown ordering letter in '" + std::string(spec) + "'");
        }
        const auto idx = static_cast<std::size_t>(op);
        if (seen[idx]) throw Error(ErrorCode::InvalidParameter, "repeated ordering letter in '" + std::string(spec) + "'");
        seen[idx] = true;
        ordering.priority[i] = op;
    }
    if (letters.find('m') > letters.find('s')) {
        throw Error(ErrorCode::InvalidParameter, "match must be tested before substitution");
    }
    return ordering;
}

std::string TbOrdering::name() const {
    std::string out = extend_gaps_first ? "affine-" : "";
    for (EditOp op : priority) out += static_cast<char>(std::tolower(edit_op_char(op)));
    return out;
}

TbParams TbParams::hardware_preset() {
    TbParams p;
    p.window = 60;
    p.overlap = 24;
    p.per_window_k = 15;
    p.stored = StoredVectors::MatchDel;
    return p;
}

int TbParams::effective_window_k() const {
    const int cap = static_cast<int>(window) - 1;
    return per_window_k >= 0 ? std::min(per_window_k, cap) : cap;
}

void TbParams::validate() const {
    if (window == 0 || overlap == 0 || overlap >= window) {
        throw Error(ErrorCode::InvalidParameter, "window geometry needs 0 < overlap < window");
    }
    if (per_window_k >= static_cast<int>(window)) {
        throw Error(ErrorCode::InvalidParameter, "per-window k must be below the window size");
    }
    if (!(error_rate >= 0.0 && error_rate < 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "error rate must lie in [0, 1)");
    }
}

namespace {

TraceVector vector_for(EditOp op) noexcept {
    switch (op) {
    case EditOp::Match: return TraceVector::Match;
    case EditOp::Subst: return TraceVector::Subst;
    case EditOp::Ins: return TraceVector::Ins;
    case EditOp::Del: return TraceVector::Del;
    }
    return TraceVector::Match;
}

bool op_available(const DcTrace& trace, EditOp op, const TbCursor& c) {
    const bool past_text = c.text_index >= trace.text_length();
    if (op != EditOp::Match && c.errors_left == 0) return false;
    if (op != EditOp::Ins && past_text) return false;
    return !trace.bit(vector_for(op), c.text_index, c.errors_left, static_cast<std::size_t>(c.pattern_bit));
}

} // namespace

WindowTraceback traceback_window(const DcTrace& trace, TbCursor start, const TbOrdering& ordering,
                                 std::size_t consume_limit) {
    WindowTraceback out;
    TbCursor c = start;
    std::optional<EditOp> prev;

    while (c.text_consumed < consume_limit && c.pattern_consumed < consume_limit && c.pattern_bit >= 0) {
        std::optional<EditOp> chosen;
        if (ordering.extend_gaps_first && prev && (*prev == EditOp::Ins || *prev == EditOp::Del) &&
            op_available(trace, *prev, c)) {
            chosen = *prev;
        }
        for (std::size_t i = 0; !chosen && i < ordering.priority.size(); ++i) {
            if (op_available(trace, ordering.priority[i], c)) chosen = ordering.priority[i];
        }
        if (!chosen) {
            throw Error(ErrorCode::DeadEnd, "no vector holds a zero at text " + std::to_string(c.text_index) +
                                                ", pattern bit " + std::to_string(c.pattern_bit) + ", errors " +
                                                std::to_string(c.errors_left));
        }

        const EditOp op = *chosen;
        out.cigar.push(op);
        prev = op;
        if (op != EditOp::Match) --c.errors_left;
        if (op != EditOp::Ins) {
            ++c.text_index;
            ++c.text_consumed;
        }
        if (op != EditOp::Del) {
            --c.pattern_bit;
            ++c.pattern_consumed;
        }
    }
    out.cursor = c;
    return out;
}

Alignment align_windowed(const EncodedSequence& text, const EncodedSequence& pattern, const TbParams& params) {
    params.validate();
    const std::size_t m = pattern.size();
    const std::size_t n = text.size();
    if (m == 0) throw Error(ErrorCode::EmptyPattern, "pattern has no characters");
    if (n == 0) throw Error(ErrorCode::WindowFailure, "text is empty");

    const auto text_codes = text.codes();
    const auto pattern_codes = pattern.codes();

    int max_edits = params.max_edits;
    if (max_edits < 0) max_edits = static_cast<int>(std::ceil(params.error_rate * static_cast<double>(m)));
    max_edits = std::clamp(max_edits, 0, static_cast<int>(m));

    const auto located = dc_scan(text_codes, generate_pattern_bitmasks(pattern_codes, 4), {max_edits, false});
    if (!located.start) {
        throw Error(ErrorCode::WindowFailure, "no match within " + std::to_string(max_edits) + " edits");
    }

    Alignment aln;
    aln.start = *located.start;
    const std::size_t limit = params.window - params.overlap;
    const int window_k = params.effective_window_k();
    std::size_t cur_text = aln.start;
    std::size_t cur_pattern = 0;

    while (cur_pattern < m && cur_text < n) {
        const std::size_t sub_m = std::min(params.window, m - cur_pattern);
        const std::size_t sub_n = std::min(params.window, n - cur_text);
        auto sub_pattern = std::span<const std::uint8_t>(pattern_codes).subspan(cur_pattern, sub_m);
        auto sub_text = std::span<const std::uint8_t>(text_codes).subspan(cur_text, sub_n);

        const int k = std::min<int>(window_k, static_cast<int>(sub_m));
        const auto dc = dc_scan(sub_text, generate_pattern_bitmasks(sub_pattern, 4), {k, true, params.stored});
        const int d0 = dc.trace->min_distance_at(0);
        if (d0 < 0) {
            throw Error(ErrorCode::WindowFailure, "window at pattern " + std::to_string(cur_pattern) + ", text " +
                                                      std::to_string(cur_text) + " has no match within " +
                                                      std::to_string(k) + " edits");
        }

        TbCursor start;
        start.pattern_bit = static_cast<int>(sub_m) - 1;
        start.errors_left = d0;
        auto wt = traceback_window(*dc.trace, start, params.ordering, limit);
        if (wt.cursor.pattern_consumed == 0 && wt.cursor.text_consumed == 0) {
            throw Error(ErrorCode::ZeroProgress, "window consumed no characters");
        }
        aln.cigar.append(wt.cigar);
        cur_pattern += wt.cursor.pattern_consumed;
        cur_text += wt.cursor.text_consumed;
        ++aln.windows;
    }
    // Text ran out before the pattern did: the rest can only be insertions.
    if (cur_pattern < m) aln.cigar.push(EditOp::Ins, static_cast<std::uint32_t>(m - cur_pattern));

    aln.text_span = cur_text - aln.start;
    aln.distance = static_cast<int>(aln.cigar.edit_count());
    return aln;
}

} // namespace bitgraph
