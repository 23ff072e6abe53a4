#include "bitgraph/genasm_dc.hpp"

#include <algorithm>
#include <thread>

#include "bitgraph/errors.hpp"

namespace bitgraph {

namespace {

// Status vectors before the first scanned character: pattern suffixes of
// length <= d can still be matched entirely by insertions, so the low d bits
// start at zero.
void init_boundary(std::span<Word> v, std::size_t m, int d) {
    wordops::fill_ones(v, top_word_mask(m));
    const std::size_t clear = std::min<std::size_t>(static_cast<std::size_t>(d), m);
    for (std::size_t p = 0; p < clear; ++p) v[p / kWordBits] &= ~(Word{1} << (p % kWordBits));
}

bool boundary_bit(std::size_t pos, int d) noexcept { return pos >= static_cast<std::size_t>(std::max(d, 0)); }

} // namespace

class DcScanner {
public:
    static DcResult run(std::span<const std::uint8_t> text, const PatternBitmasks& masks, const DcParams& params) {
        const std::size_t n = text.size();
        const std::size_t m = masks.pattern_length();
        if (m == 0) throw Error(ErrorCode::EmptyPattern, "pattern masks are empty");
        if (n == 0) throw Error(ErrorCode::InvalidParameter, "text must hold at least one character");
        if (params.k < 0) throw Error(ErrorCode::InvalidParameter, "k must be >= 0");
        if (params.capture_intermediates && static_cast<std::size_t>(params.k) > m) {
            throw Error(ErrorCode::InvalidParameter, "k may not exceed the pattern length when capturing");
        }

        const int k = params.k;
        const std::size_t nw = masks.word_count();
        const Word top = top_word_mask(m);
        const std::size_t rows = static_cast<std::size_t>(k) + 1;
        const std::size_t msb_word = (m - 1) / kWordBits;
        const Word msb_bit = Word{1} << ((m - 1) % kWordBits);

        std::vector<Word> cur(rows * nw);
        std::vector<Word> old(rows * nw);
        auto row = [nw](std::vector<Word>& v, std::size_t d) { return std::span<Word>(v.data() + d * nw, nw); };
        for (std::size_t d = 0; d < rows; ++d) init_boundary(row(cur, d), m, static_cast<int>(d));

        DcResult result;
        DcTrace* trace = nullptr;
        if (params.capture_intermediates) {
            result.trace.emplace();
            trace = &*result.trace;
            trace->n_ = n;
            trace->m_ = m;
            trace->nw_ = nw;
            trace->k_ = k;
            trace->stored_ = params.stored;
            trace->slots_ = stored_vector_count(params.stored);
            trace->vectors_.assign(n * rows * trace->slots_ * nw, 0);
            trace->first_zero_msb_.assign(n, -1);
            trace->text_.assign(text.begin(), text.end());
            trace->masks_ = masks;
        }

        int best_d = -1;
        std::size_t best_i = 0;
        std::vector<Word> scratch(trace ? 4 * nw : 0);

        for (std::size_t i = n; i-- > 0;) {
            cur.swap(old);
            const auto pm = masks.mask_words(text[i]);
            wordops::shl1_or(row(cur, 0), row(old, 0), pm, top);

            for (std::size_t d = 1; d < rows; ++d) {
                const Word* od1 = old.data() + (d - 1) * nw;
                const Word* od = old.data() + d * nw;
                const Word* rd1 = cur.data() + (d - 1) * nw;
                Word* rd = cur.data() + d * nw;
                for (std::size_t w = nw; w-- > 0;) {
                    const Word lo_od1 = w ? od1[w - 1] >> (kWordBits - 1) : 0;
                    const Word lo_od = w ? od[w - 1] >> (kWordBits - 1) : 0;
                    const Word lo_rd1 = w ? rd1[w - 1] >> (kWordBits - 1) : 0;
                    const Word del = od1[w];
                    const Word sub = (od1[w] << 1) | lo_od1;
                    const Word ins = (rd1[w] << 1) | lo_rd1;
                    const Word mat = ((od[w] << 1) | lo_od) | pm[w];
                    rd[w] = del & sub & ins & mat;
                }
                rd[nw - 1] &= top;
            }

            if (trace) capture(*trace, i, cur, old, pm, scratch);

            for (std::size_t d = 0; d < rows; ++d) {
                if ((cur[d * nw + msb_word] & msb_bit) == 0) {
                    const int di = static_cast<int>(d);
                    if (trace) trace->first_zero_msb_[i] = di;
                    if (best_d < 0 || di <= best_d) {
                        best_d = di;
                        best_i = i;
                    }
                    break;
                }
            }
        }

        if (best_d >= 0) {
            result.start = best_i;
            result.distance = best_d;
        }
        return result;
    }

private:
    static void capture(DcTrace& trace, std::size_t i, const std::vector<Word>& cur, const std::vector<Word>& old,
                        std::span<const Word> pm, std::vector<Word>& scratch) {
        const std::size_t nw = trace.nw_;
        const Word top = top_word_mask(trace.m_);
        const std::size_t rows = static_cast<std::size_t>(trace.k_) + 1;
        auto cur_row = [&](std::size_t d) { return std::span<const Word>(cur.data() + d * nw, nw); };
        auto old_row = [&](std::size_t d) { return std::span<const Word>(old.data() + d * nw, nw); };
        std::span<Word> mat(scratch.data(), nw);
        std::span<Word> sub(scratch.data() + nw, nw);
        std::span<Word> ins(scratch.data() + 2 * nw, nw);
        std::span<Word> del(scratch.data() + 3 * nw, nw);

        for (std::size_t d = 0; d < rows; ++d) {
            auto dst = [&](unsigned s) {
                return std::span<Word>(trace.vectors_.data() + ((i * rows + d) * trace.slots_ + s) * nw, nw);
            };
            if (trace.stored_ == StoredVectors::StatusOnly) {
                wordops::copy(dst(0), cur_row(d));
                continue;
            }
            wordops::shl1_or(mat, old_row(d), pm, top);
            if (d == 0) {
                wordops::fill_ones(sub, top);
                wordops::fill_ones(ins, top);
                wordops::fill_ones(del, top);
            } else {
                wordops::copy(del, old_row(d - 1));
                wordops::shl1(sub, old_row(d - 1), top);
                wordops::shl1(ins, cur_row(d - 1), top);
            }
            switch (trace.stored_) {
            case StoredVectors::All:
                wordops::copy(dst(0), mat);
                wordops::copy(dst(1), sub);
                wordops::copy(dst(2), ins);
                wordops::copy(dst(3), del);
                break;
            case StoredVectors::MatchInsDel:
                wordops::copy(dst(0), mat);
                wordops::copy(dst(1), ins);
                wordops::copy(dst(2), del);
                break;
            case StoredVectors::MatchDel:
                wordops::copy(dst(0), mat);
                wordops::copy(dst(1), del);
                break;
            case StoredVectors::StatusOnly: break;
            }
        }
    }
};

bool DcTrace::status_bit(std::size_t i, int d, std::size_t pos) const {
    if (i >= n_) return boundary_bit(pos, d);
    switch (stored_) {
    case StoredVectors::StatusOnly: return wordops::test(slot(i, d, 0), pos);
    case StoredVectors::MatchDel:
        // R[d] = M & S & D & (R[d-1] << 1) within one iteration; R[0] = M.
        if (!wordops::test(slot(i, d, 0), pos)) return false;
        if (d == 0) return true;
        return bit(TraceVector::Subst, i, d, pos) && wordops::test(slot(i, d, 1), pos) &&
               (pos == 0 ? false : status_bit(i, d - 1, pos - 1));
    default:
        return bit(TraceVector::Match, i, d, pos) && bit(TraceVector::Subst, i, d, pos) &&
               bit(TraceVector::Ins, i, d, pos) && bit(TraceVector::Del, i, d, pos);
    }
}

bool DcTrace::bit(TraceVector which, std::size_t i, int d, std::size_t pos) const {
    if (d < 0 || d > k_ || pos >= m_) throw Error(ErrorCode::InvalidParameter, "trace coordinate out of range");
    if (which == TraceVector::Status) return status_bit(i, d, pos);

    if (i >= n_) {
        // Past the text only pattern characters can be consumed.
        if (which != TraceVector::Ins || d == 0) return true;
        return pos == 0 ? false : boundary_bit(pos - 1, d - 1);
    }
    if (d == 0 && which != TraceVector::Match) return true;

    switch (stored_) {
    case StoredVectors::All: {
        const unsigned s = which == TraceVector::Match ? 0 : which == TraceVector::Subst ? 1 : which == TraceVector::Ins ? 2 : 3;
        return wordops::test(slot(i, d, s), pos);
    }
    case StoredVectors::MatchInsDel:
        switch (which) {
        case TraceVector::Match: return wordops::test(slot(i, d, 0), pos);
        case TraceVector::Ins: return wordops::test(slot(i, d, 1), pos);
        case TraceVector::Del: return wordops::test(slot(i, d, 2), pos);
        case TraceVector::Subst: return pos == 0 ? false : wordops::test(slot(i, d, 2), pos - 1);
        default: break;
        }
        break;
    case StoredVectors::MatchDel:
        switch (which) {
        case TraceVector::Match: return wordops::test(slot(i, d, 0), pos);
        case TraceVector::Del: return wordops::test(slot(i, d, 1), pos);
        case TraceVector::Subst: return pos == 0 ? false : wordops::test(slot(i, d, 1), pos - 1);
        case TraceVector::Ins: return pos == 0 ? false : status_bit(i, d - 1, pos - 1);
        default: break;
        }
        break;
    case StoredVectors::StatusOnly: {
        const auto pm = masks_.mask_words(text_[i]);
        switch (which) {
        case TraceVector::Match:
            return (pos == 0 ? false : status_bit(i + 1, d, pos - 1)) || wordops::test(pm, pos);
        case TraceVector::Subst: return pos == 0 ? false : status_bit(i + 1, d - 1, pos - 1);
        case TraceVector::Ins: return pos == 0 ? false : status_bit(i, d - 1, pos - 1);
        case TraceVector::Del: return status_bit(i + 1, d - 1, pos);
        default: break;
        }
        break;
    }
    }
    return true;
}

DcResult dc_scan(std::span<const std::uint8_t> text, const PatternBitmasks& masks, const DcParams& params) {
    return DcScanner::run(text, masks, params);
}

DcResult dc_scan(const EncodedSequence& text, const PatternBitmasks& masks, const DcParams& params) {
    const auto codes = text.codes();
    return DcScanner::run(codes, masks, params);
}

DcResult dc_windows(const EncodedSequence& text, const EncodedSequence& pattern, int k, unsigned workers) {
    const auto codes = text.codes();
    const auto masks = generate_pattern_bitmasks(pattern);
    const std::size_t n = codes.size();
    const std::size_t overlap = pattern.size() + static_cast<std::size_t>(std::max(k, 0));
    const DcParams params{k, false, StoredVectors::MatchDel};

    // Each sub-text owns `stride` start positions and extends m + k past them,
    // which covers the longest possible alignment span.
    const std::size_t max_parts = std::max<std::size_t>(1, n / std::max<std::size_t>(overlap, 1));
    const std::size_t parts = std::clamp<std::size_t>(workers, 1, max_parts);
    if (parts == 1) return DcScanner::run(codes, masks, params);

    const std::size_t stride = (n + parts - 1) / parts;
    std::vector<DcResult> partial(parts);
    auto scan_part = [&](std::size_t p) {
        const std::size_t begin = p * stride;
        if (begin >= n) return;
        const std::size_t end = std::min(n, begin + stride + overlap);
        auto sub = std::span<const std::uint8_t>(codes).subspan(begin, end - begin);
        partial[p] = DcScanner::run(sub, masks, params);
        if (partial[p].start) *partial[p].start += begin;
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(parts);
        for (std::size_t p = 0; p < parts; ++p) pool.emplace_back(scan_part, p);
    }

    DcResult merged;
    for (const auto& r : partial) {
        if (!r.distance) continue;
        if (!merged.distance || *r.distance < *merged.distance ||
            (*r.distance == *merged.distance && *r.start < *merged.start)) {
            merged.start = r.start;
            merged.distance = r.distance;
        }
    }
    return merged;
}

FilterDecision filter_pair(const EncodedSequence& reference, const EncodedSequence& read, int threshold) {
    if (reference.empty() || read.empty()) {
        const int d = static_cast<int>(read.size());
        return {d <= threshold, d};
    }
    const auto masks = generate_pattern_bitmasks(read);
    const auto codes = reference.codes();
    const int k = std::clamp(threshold, 0, static_cast<int>(read.size()));
    const auto first = DcScanner::run(codes, masks, {k, false, StoredVectors::MatchDel});
    if (first.distance && *first.distance <= threshold) return {true, *first.distance};
    const auto full = DcScanner::run(codes, masks, {static_cast<int>(read.size()), false, StoredVectors::MatchDel});
    return {false, full.distance.value_or(static_cast<int>(read.size()))};
}

} // namespace bitgraph
