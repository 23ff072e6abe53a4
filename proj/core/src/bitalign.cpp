#include "bitgraph/bitalign.hpp"

#include <algorithm>
#include <string>

#include "bitgraph/errors.hpp"

namespace bitgraph {

std::span<const Word> GraphDcState::status(std::size_t i, int d) const noexcept {
    if (i >= n_) return {boundary_.data() + static_cast<std::size_t>(d) * nw_, nw_};
    return {all_r_.data() + (i * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(d)) * nw_, nw_};
}

bool GraphDcState::status_bit(std::size_t i, int d, std::size_t pos) const noexcept {
    return wordops::test(status(i, d), pos);
}

GraphDcState graph_dc(const CharGraph& cg, const PatternBitmasks& masks, int k) {
    const std::size_t m = masks.pattern_length();
    if (m == 0) throw Error(ErrorCode::EmptyPattern, "pattern has no characters");
    if (k < 0) throw Error(ErrorCode::InvalidParameter, "k must be non-negative");
    k = std::min<int>(k, static_cast<int>(m));

    GraphDcState st;
    st.n_ = cg.size();
    st.m_ = m;
    st.nw_ = masks.word_count();
    st.k_ = k;
    st.masks_ = masks;
    const std::size_t nw = st.nw_;
    const std::size_t rows = static_cast<std::size_t>(k) + 1;
    const Word top = top_word_mask(m);
    st.all_r_.assign(st.n_ * rows * nw, 0);

    // Past a sink: pattern suffixes of length <= d can still be inserted.
    st.boundary_.assign(rows * nw, 0);
    for (std::size_t d = 0; d < rows; ++d) {
        std::span<Word> b(st.boundary_.data() + d * nw, nw);
        wordops::fill_ones(b, top);
        for (std::size_t p = 0; p < std::min(d, m); ++p) b[p / kWordBits] &= ~(Word{1} << (p % kWordBits));
    }

    std::vector<Word> tmp(nw);
    const std::size_t msb = m - 1;
    std::optional<int> best;
    std::optional<std::uint32_t> best_i;
    std::size_t slots = 0;
    const std::uint32_t boundary_index = static_cast<std::uint32_t>(st.n_);

    for (std::size_t ii = st.n_; ii-- > 0;) {
        const auto pm = masks.mask_words(cg.code(ii));
        auto succ = cg.successors(ii);
        const std::uint32_t* begin = succ.data();
        std::size_t count = succ.size();
        if (count == 0) {
            begin = &boundary_index;
            count = 1;
        }
        slots += count;
        auto row = [&](int d) {
            return std::span<Word>(st.all_r_.data() + (ii * rows + static_cast<std::size_t>(d)) * nw, nw);
        };

        // R[0] = AND over successors of (R_j[0] << 1) | PM.
        auto r0 = row(0);
        wordops::fill_ones(r0, top);
        for (std::size_t s = 0; s < count; ++s) wordops::and_shl1_or(r0, st.status(begin[s], 0), pm);
        r0.back() &= top;

        for (int d = 1; d <= k; ++d) {
            auto rd = row(d);
            // Insertion from this character's own R[d-1].
            wordops::shl1(rd, row(d - 1), top);
            for (std::size_t s = 0; s < count; ++s) {
                const auto prev = st.status(begin[s], d - 1);
                wordops::and_with(rd, prev);                             // deletion
                wordops::and_shl1(rd, prev);                             // substitution
                wordops::and_shl1_or(rd, st.status(begin[s], d), pm);    // match
            }
            rd.back() &= top;
        }

        for (int d = 0; d <= k; ++d) {
            if (!wordops::test(row(d), msb)) {
                if (!best || d <= *best) {
                    best = d;
                    best_i = static_cast<std::uint32_t>(ii);
                }
                break;
            }
        }
    }
    st.per_edge_slots_ = slots;
    st.best_distance = best;
    st.best_start = best_i;
    return st;
}

namespace {

struct Cursor {
    std::uint32_t ch;
    int pos;
    int d;
};

struct Step {
    EditOp op;
    std::uint32_t next; // next character (n for the boundary)
};

std::optional<Step> try_op(const GraphDcState& st, const CharGraph& cg, const Cursor& c, EditOp op) {
    const std::size_t n = st.char_count();
    const auto upos = static_cast<std::size_t>(c.pos);
    if (op != EditOp::Match && c.d == 0) return std::nullopt;
    if (c.ch >= n) {
        // Boundary: only pattern characters remain to be consumed.
        if (op != EditOp::Ins) return std::nullopt;
        if (upos == 0 || !st.status_bit(n, c.d - 1, upos - 1)) return Step{op, c.ch};
        return std::nullopt;
    }
    if (op == EditOp::Ins) {
        if (upos == 0 || !st.status_bit(c.ch, c.d - 1, upos - 1)) return Step{op, c.ch};
        return std::nullopt;
    }
    const bool pm_bit = wordops::test(st.masks().mask_words(cg.code(c.ch)), upos);
    auto succ = cg.successors(c.ch);
    const std::uint32_t boundary = static_cast<std::uint32_t>(n);
    std::span<const std::uint32_t> targets = succ.empty() ? std::span<const std::uint32_t>(&boundary, 1) : succ;
    for (auto j : targets) {
        bool zero = false;
        switch (op) {
        case EditOp::Match: zero = !pm_bit && (upos == 0 || !st.status_bit(j, c.d, upos - 1)); break;
        case EditOp::Subst: zero = upos == 0 || !st.status_bit(j, c.d - 1, upos - 1); break;
        case EditOp::Del: zero = !st.status_bit(j, c.d - 1, upos); break;
        case EditOp::Ins: break;
        }
        if (zero) return Step{op, j};
    }
    return std::nullopt;
}

} // namespace

GraphAlignment graph_traceback(const GraphDcState& state, const CharGraph& cg, std::uint32_t start, int edit_distance,
                               const TbOrdering& ordering) {
    if (start >= state.char_count() || edit_distance < 0 || edit_distance > state.max_errors()) {
        throw Error(ErrorCode::InvalidParameter, "traceback start outside the computed state");
    }
    const auto m = state.pattern_length();
    if (state.status_bit(start, edit_distance, m - 1)) {
        throw Error(ErrorCode::DeadEnd, "no match ends at the requested start and distance");
    }
    GraphAlignment out;
    out.start_char = start;
    Cursor c{start, static_cast<int>(m) - 1, edit_distance};
    std::optional<EditOp> prev;

    while (c.pos >= 0) {
        std::optional<Step> step;
        if (ordering.extend_gaps_first && prev && (*prev == EditOp::Ins || *prev == EditOp::Del)) {
            step = try_op(state, cg, c, *prev);
        }
        for (std::size_t i = 0; !step && i < ordering.priority.size(); ++i) {
            step = try_op(state, cg, c, ordering.priority[i]);
        }
        if (!step) {
            throw Error(ErrorCode::DeadEnd, "no vector holds a zero at character " + std::to_string(c.ch) +
                                                ", pattern bit " + std::to_string(c.pos) + ", errors " +
                                                std::to_string(c.d));
        }
        out.cigar.push(step->op);
        prev = step->op;
        if (step->op != EditOp::Match) --c.d;
        if (step->op != EditOp::Ins) {
            out.path.push_back(c.ch);
            c.ch = step->next;
        }
        if (step->op != EditOp::Del) --c.pos;
    }
    out.distance = static_cast<int>(out.cigar.edit_count());
    if (out.distance != edit_distance) {
        throw Error(ErrorCode::DeadEnd, "traceback spent " + std::to_string(out.distance) + " of " +
                                            std::to_string(edit_distance) + " edits");
    }
    return out;
}

GraphAlignment align_to_graph(const CharGraph& cg, const EncodedSequence& pattern, int k, const TbOrdering& ordering) {
    if (pattern.empty()) throw Error(ErrorCode::EmptyPattern, "pattern has no characters");
    if (cg.empty()) throw Error(ErrorCode::NoAlignmentWithinK, "graph has no characters");
    const auto state = graph_dc(cg, generate_pattern_bitmasks(pattern), k);
    if (!state.best_distance) {
        throw Error(ErrorCode::NoAlignmentWithinK, "no alignment within " + std::to_string(k) + " edits");
    }
    return graph_traceback(state, cg, *state.best_start, *state.best_distance, ordering);
}

} // namespace bitgraph
