#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bitgraph/char_graph.hpp"
#include "bitgraph/sequence.hpp"

namespace bitgraph {

class MinimizerIndex;

struct MinimizerParams {
    unsigned k = 15; ///< k-mer length, 1..31
    unsigned w = 10; ///< k-mers per window
    std::size_t freq_threshold = 512;

    void validate() const;
};

struct Minimizer {
    std::uint64_t hash = 0;
    std::uint32_t read_offset = 0; ///< a
    std::uint32_t kmer_end = 0;    ///< b = a + k

    friend bool operator==(const Minimizer&, const Minimizer&) = default;
    friend auto operator<=>(const Minimizer&, const Minimizer&) = default;
};

/// Invertible 64-bit finaliser (MurmurHash3 fmix64: xor-shift 33, multiply by
/// 0xff51afd7ed558ccd, xor-shift 33, multiply by 0xc4ceb9fe1a85ec53,
/// xor-shift 33) applied to the 2-bit packed k-mer.
std::uint64_t mix64(std::uint64_t x) noexcept;
std::uint64_t kmer_hash(std::uint64_t packed_kmer) noexcept;

/// Minimum-hash k-mer of every window of w consecutive k-mers, ties to the
/// leftmost, repeated selections reported once, sorted by offset. k-mers
/// containing ambiguous bases are never selected. One pass with a monotone
/// queue. Throws ReadTooShort when the read has fewer than k + w - 1 bases.
std::vector<Minimizer> compute_minimizers(const EncodedSequence& read, const MinimizerParams& params);

struct SeedHit {
    GraphPosition position; ///< c: where the minimizer's first base lies
    Minimizer minimizer;
};

/// Reference window around a seed hit: `left_span` bases back from c and
/// `right_span` bases forward from c + k.
struct CandidateRegion {
    GraphPosition anchor;
    std::size_t left_span = 0;
    std::size_t right_span = 0;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::size_t read_length = 0;
    double error_rate = 0.0;
};

/// left_span = a + ceil(E*m), right_span = (m - b) + ceil(E*m).
CandidateRegion seed_region(const Minimizer& min, const SeedHit& hit, std::size_t read_length, double error_rate);

/// Keeps minimizers whose index frequency is in 1..threshold.
std::vector<Minimizer> filter_by_frequency(const std::vector<Minimizer>& minimizers, const MinimizerIndex& index,
                                           std::size_t threshold);

} // namespace bitgraph
