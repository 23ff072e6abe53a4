#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bitgraph/char_graph.hpp"
#include "bitgraph/graph.hpp"
#include "bitgraph/minseed.hpp"

namespace bitgraph {

inline constexpr unsigned kMinBucketBits = 16;
inline constexpr unsigned kMaxBucketBits = 30;
inline constexpr unsigned kDefaultBucketBits = 16;
inline constexpr std::uint16_t kIndexFormatVersion = 1;
/// magic(4) version(2) k(1) w(1) bucket bits(1) padding(3) minimizers(8) locations(8)
inline constexpr std::size_t kIndexHeaderBytes = 28;

struct MinimizerEntry {
    std::uint64_t hash = 0;
    std::uint32_t location_start = 0; ///< 24 bits on disk
    std::uint32_t location_count = 0; ///< 24 bits on disk

    friend bool operator==(const MinimizerEntry&, const MinimizerEntry&) = default;
};

struct IndexQuery {
    std::size_t frequency = 0;
    std::span<const GraphPosition> locations;
};

/// Three-level table: 2^B bucket entries (first minimizer of each bucket;
/// the count is the distance to the next entry), minimizer records sorted by
/// full 64-bit hash, and location records grouped per minimizer and sorted
/// by (node, offset). Bucket = top B bits of the hash.
class MinimizerIndex {
public:
    MinimizerIndex() = default;

    unsigned k() const noexcept { return k_; }
    unsigned w() const noexcept { return w_; }
    unsigned bucket_bits() const noexcept { return bucket_bits_; }

    std::size_t frequency(std::uint64_t hash) const noexcept;
    IndexQuery query(std::uint64_t hash) const noexcept;

    std::span<const std::uint32_t> buckets() const noexcept { return buckets_; }
    std::span<const MinimizerEntry> minimizers() const noexcept { return minimizers_; }
    std::span<const GraphPosition> locations() const noexcept { return locations_; }

    /// header + 2^B * 4 + 12 per minimizer + 8 per location.
    std::size_t serialized_size() const noexcept;

    friend bool operator==(const MinimizerIndex&, const MinimizerIndex&) = default;

private:
    friend MinimizerIndex build_index(const GenomeGraph&, const MinimizerParams&, unsigned);
    friend MinimizerIndex read_index(std::istream&);

    std::uint32_t bucket_of(std::uint64_t hash) const noexcept {
        return static_cast<std::uint32_t>(hash >> (64 - bucket_bits_));
    }

    unsigned k_ = 0;
    unsigned w_ = 0;
    unsigned bucket_bits_ = kDefaultBucketBits;
    std::vector<std::uint32_t> buckets_;
    std::vector<MinimizerEntry> minimizers_;
    std::vector<GraphPosition> locations_;
};

/// Indexes the minimizers of every node sequence with (node, offset)
/// locations. Nodes shorter than k contribute nothing; nodes shorter than
/// k + w - 1 contribute their single best k-mer. k-mers spanning node
/// boundaries are not indexed.
MinimizerIndex build_index(const GenomeGraph& graph, const MinimizerParams& params,
                           unsigned bucket_bits = kDefaultBucketBits);

void write_index(std::ostream& out, const MinimizerIndex& index);
MinimizerIndex read_index(std::istream& in);
void save_index(const std::string& path, const MinimizerIndex& index);
MinimizerIndex load_index(const std::string& path);

/// Warning text when the index was built with different k/w, or nothing.
std::optional<std::string> index_param_mismatch(const MinimizerIndex& index, const MinimizerParams& params);

} // namespace bitgraph
