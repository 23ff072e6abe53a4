#include "bitgraph/mapper.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>
#include <tuple>

#include "bitgraph/errors.hpp"

namespace bitgraph {

Mapper::Mapper(const GenomeGraph& graph, const MinimizerIndex& index, MapperParams params)
    : graph_(graph), index_(index), params_(std::move(params)) {
    params_.minimizers.validate();
    if (!(params_.error_rate >= 0.0 && params_.error_rate < 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "error rate must lie in [0, 1)");
    }
}

MappingRecord Mapper::map_read(const std::string& name, const std::string& sequence) const {
    MappingRecord rec;
    rec.read_name = name;
    rec.read_length = sequence.size();
    const auto read = EncodedSequence::encode(sequence);

    std::vector<Minimizer> mins;
    try {
        mins = compute_minimizers(read, params_.minimizers);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ReadTooShort) throw;
        rec.note = "ReadTooShort";
        return rec;
    }
    const auto seeds = filter_by_frequency(mins, index_, params_.minimizers.freq_threshold);
    rec.seed_count = seeds.size();
    if (seeds.empty()) {
        rec.note = "NoSeeds";
        return rec;
    }

    const int k = params_.max_edits >= 0
                      ? params_.max_edits
                      : static_cast<int>(std::ceil(params_.error_rate * static_cast<double>(read.size())));
    const auto masks = generate_pattern_bitmasks(read);

    // Different seeds of one locus usually yield the same subgraph; align each once.
    std::set<std::tuple<GraphPosition, GraphPosition, std::size_t>> seen;
    std::optional<GraphAlignment> best;
    CharGraph best_graph;
    std::string last_error;

    for (const auto& m : seeds) {
        for (const auto& loc : index_.query(m.hash).locations) {
            const auto region = seed_region(m, SeedHit{loc, m}, read.size(), params_.error_rate);
            // The right span counts from c + k; the subgraph is measured from c.
            auto cg = extract_subgraph(graph_, loc.node, loc.offset, region.left_span,
                                       region.right_span + params_.minimizers.k - 1);
            if (cg.empty()) continue;
            const auto key = std::make_tuple(cg.origin(0), cg.origin(cg.size() - 1), cg.size());
            if (!seen.insert(key).second) continue;
            ++rec.candidate_count;
            try {
                if (params_.hop_limit > 0) {
                    cg = with_hop_successors(cg, build_hop_bits(cg, params_.hop_limit, params_.hop_policy));
                }
                const auto state = graph_dc(cg, masks, k);
                if (!state.best_distance) continue;
                const auto start_pos = cg.origin(*state.best_start);
                if (best) {
                    const auto best_pos = best_graph.origin(best->start_char);
                    if (*state.best_distance > best->distance ||
                        (*state.best_distance == best->distance && !(start_pos < best_pos))) {
                        continue;
                    }
                }
                auto aln = graph_traceback(state, cg, *state.best_start, *state.best_distance, params_.ordering);
                best = std::move(aln);
                best_graph = std::move(cg);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::DeadEnd || e.code() == ErrorCode::ZeroProgress) throw;
                last_error = error_code_name(e.code());
            }
        }
    }

    if (!best) {
        rec.note = last_error.empty() ? "NoAlignmentWithinK" : last_error;
        return rec;
    }
    rec.mapped = true;
    rec.distance = best->distance;
    rec.cigar = best->cigar;
    for (auto c : best->path) {
        const auto& pos = best_graph.origin(c);
        rec.aligned.push_back(pos);
        if (rec.path.empty() || rec.path.back() != pos.node) rec.path.push_back(pos.node);
    }
    if (!rec.aligned.empty()) {
        rec.target_start = rec.aligned.front();
        rec.target_end = rec.aligned.back();
    } else {
        rec.target_start = rec.target_end = best_graph.origin(best->start_char);
        rec.path.push_back(rec.target_start.node);
    }
    return rec;
}

std::vector<MappingRecord> Mapper::map_batch(const std::vector<std::pair<std::string, std::string>>& reads) const {
    std::vector<MappingRecord> out(reads.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(params_.threads, static_cast<unsigned>(reads.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < reads.size(); ++i) out[i] = map_read(reads[i].first, reads[i].second);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = next++; i < reads.size(); i = next++) {
                        out[i] = map_read(reads[i].first, reads[i].second);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::string format_record(const MappingRecord& rec, const GenomeGraph& graph) {
    const std::string len = std::to_string(rec.read_length);
    if (!rec.mapped) {
        return rec.read_name + '\t' + len + "\t0\t0\t*\t*\t0\t0\t0\t0\t0\ttp:A:U\tsd:i:" + std::to_string(rec.seed_count) +
               "\tnt:Z:" + (rec.note.empty() ? "unmapped" : rec.note);
    }
    std::string path;
    for (auto n : rec.path) path += '>' + graph.name(n);
    const auto matches = rec.cigar.count(EditOp::Match);
    const auto columns = rec.cigar.count(EditOp::Match) + rec.cigar.count(EditOp::Subst) + rec.cigar.count(EditOp::Ins) +
                         rec.cigar.count(EditOp::Del);
    std::string out = rec.read_name + '\t' + len + "\t0\t" + len + "\t+\t" + path + '\t' +
                      std::to_string(rec.target_start.offset) + '\t' + std::to_string(rec.target_end.offset + 1) + '\t' +
                      std::to_string(matches) + '\t' + std::to_string(columns) + "\t255\ttp:A:P\ted:i:" +
                      std::to_string(rec.distance) + "\tsd:i:" + std::to_string(rec.seed_count) +
                      "\tcd:i:" + std::to_string(rec.candidate_count) + "\tcg:Z:" + rec.cigar.to_string();
    return out;
}

} // namespace bitgraph
