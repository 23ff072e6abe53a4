#include "bitgraph/minseed.hpp"

#include <cmath>
#include <deque>

#include "bitgraph/errors.hpp"
#include "bitgraph/gindex.hpp"

namespace bitgraph {

void MinimizerParams::validate() const {
    if (k < 1 || k > 31) throw Error(ErrorCode::InvalidParameter, "k must be in 1..31");
    if (w < 1) throw Error(ErrorCode::InvalidParameter, "w must be at least 1");
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

std::uint64_t kmer_hash(std::uint64_t packed_kmer) noexcept { return mix64(packed_kmer); }

std::vector<Minimizer> compute_minimizers(const EncodedSequence& read, const MinimizerParams& params) {
    params.validate();
    const std::size_t k = params.k;
    const std::size_t w = params.w;
    const std::size_t n = read.size();
    if (n < k + w - 1) {
        throw Error(ErrorCode::ReadTooShort, "read of " + std::to_string(n) + " bases is shorter than k + w - 1 = " +
                                                 std::to_string(k + w - 1));
    }
    struct Entry {
        std::uint64_t hash;
        std::uint32_t pos;
    };
    std::deque<Entry> queue;
    std::vector<Minimizer> out;
    const std::uint64_t kmask = k == 32 ? ~0ULL : ((1ULL << (2 * k)) - 1);
    std::uint64_t packed = 0;
    std::size_t valid_run = 0; // consecutive unambiguous bases ending here

    for (std::size_t i = 0; i < n; ++i) {
        const auto c = read.code(i);
        if (c == kAmbiguousCode) {
            valid_run = 0;
            packed = 0;
        } else {
            ++valid_run;
            // First base of the k-mer in the most significant position.
            packed = ((packed << 2) | c) & kmask;
        }
        if (i + 1 < k) continue;
        const std::size_t p = i + 1 - k; // k-mer start
        if (valid_run >= k) {
            const Entry e{kmer_hash(packed), static_cast<std::uint32_t>(p)};
            while (!queue.empty() && queue.back().hash > e.hash) queue.pop_back();
            queue.push_back(e);
        }
        while (!queue.empty() && queue.front().pos + w <= p) queue.pop_front();
        if (p + 1 >= w && !queue.empty()) {
            const auto& best = queue.front();
            if (out.empty() || out.back().read_offset != best.pos) {
                out.push_back({best.hash, best.pos, static_cast<std::uint32_t>(best.pos + k)});
            }
        }
    }
    return out;
}

CandidateRegion seed_region(const Minimizer& min, const SeedHit& hit, std::size_t read_length, double error_rate) {
    if (!(error_rate >= 0.0 && error_rate < 1.0)) throw Error(ErrorCode::InvalidParameter, "error rate must lie in [0, 1)");
    const auto slack = static_cast<std::size_t>(std::ceil(error_rate * static_cast<double>(read_length)));
    CandidateRegion r;
    r.anchor = hit.position;
    r.a = min.read_offset;
    r.b = min.kmer_end;
    r.read_length = read_length;
    r.error_rate = error_rate;
    r.left_span = min.read_offset + slack;
    r.right_span = (read_length > min.kmer_end ? read_length - min.kmer_end : 0) + slack;
    return r;
}

std::vector<Minimizer> filter_by_frequency(const std::vector<Minimizer>& minimizers, const MinimizerIndex& index,
                                           std::size_t threshold) {
    std::vector<Minimizer> out;
    for (const auto& m : minimizers) {
        const auto f = index.frequency(m.hash);
        if (f > 0 && f <= threshold) out.push_back(m);
    }
    return out;
}

} // namespace bitgraph
