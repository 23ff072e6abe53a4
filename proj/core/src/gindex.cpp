#include "bitgraph/gindex.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "binary_io.hpp"
#include "bitgraph/errors.hpp"

namespace bitgraph {

namespace {

constexpr std::uint32_t kMax24 = (1u << 24) - 1;

void check_bucket_bits(unsigned b) {
    if (b < kMinBucketBits || b > kMaxBucketBits) {
        throw Error(ErrorCode::InvalidParameter, "bucket bits must be in " + std::to_string(kMinBucketBits) + ".." +
                                                     std::to_string(kMaxBucketBits));
    }
}

} // namespace

std::size_t MinimizerIndex::frequency(std::uint64_t hash) const noexcept { return query(hash).frequency; }

IndexQuery MinimizerIndex::query(std::uint64_t hash) const noexcept {
    if (buckets_.empty()) return {};
    const auto b = bucket_of(hash);
    const auto first = minimizers_.begin() + buckets_[b];
    const auto last = b + 1 < buckets_.size() ? minimizers_.begin() + buckets_[b + 1] : minimizers_.end();
    const auto it = std::lower_bound(first, last, hash, [](const MinimizerEntry& e, std::uint64_t h) { return e.hash < h; });
    if (it == last || it->hash != hash) return {};
    return {it->location_count, std::span<const GraphPosition>(locations_).subspan(it->location_start, it->location_count)};
}

std::size_t MinimizerIndex::serialized_size() const noexcept {
    return kIndexHeaderBytes + (std::size_t{1} << bucket_bits_) * 4 + minimizers_.size() * 12 + locations_.size() * 8;
}

MinimizerIndex build_index(const GenomeGraph& graph, const MinimizerParams& params, unsigned bucket_bits) {
    params.validate();
    check_bucket_bits(bucket_bits);
    std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>> hits;
    for (std::uint32_t node = 0; node < graph.node_count(); ++node) {
        const auto len = graph.node_length(node);
        if (len < params.k) continue;
        const auto seq = EncodedSequence::encode(graph.node_sequence(node));
        MinimizerParams p = params;
        if (len < params.k + params.w - 1) p.w = len - params.k + 1;
        for (const auto& m : compute_minimizers(seq, p)) hits.emplace_back(m.hash, node, m.read_offset);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

    MinimizerIndex idx;
    idx.k_ = params.k;
    idx.w_ = params.w;
    idx.bucket_bits_ = bucket_bits;
    idx.locations_.reserve(hits.size());
    for (std::size_t i = 0; i < hits.size();) {
        std::size_t j = i;
        const auto h = std::get<0>(hits[i]);
        while (j < hits.size() && std::get<0>(hits[j]) == h) {
            idx.locations_.push_back({std::get<1>(hits[j]), std::get<2>(hits[j])});
            ++j;
        }
        if (i > kMax24 || j - i > kMax24) throw Error(ErrorCode::InvalidParameter, "index exceeds 24-bit location fields");
        idx.minimizers_.push_back({h, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j - i)});
        i = j;
    }
    const std::size_t nb = std::size_t{1} << bucket_bits;
    idx.buckets_.assign(nb, 0);
    std::size_t mi = 0;
    for (std::size_t b = 0; b < nb; ++b) {
        while (mi < idx.minimizers_.size() && idx.bucket_of(idx.minimizers_[mi].hash) < b) ++mi;
        idx.buckets_[b] = static_cast<std::uint32_t>(mi);
    }
    return idx;
}

void write_index(std::ostream& out, const MinimizerIndex& index) {
    using detail::put_le;
    out.write("BGIX", 4);
    put_le<std::uint16_t>(out, kIndexFormatVersion);
    put_le<std::uint8_t>(out, static_cast<std::uint8_t>(index.k()));
    put_le<std::uint8_t>(out, static_cast<std::uint8_t>(index.w()));
    put_le<std::uint8_t>(out, static_cast<std::uint8_t>(index.bucket_bits()));
    for (int i = 0; i < 3; ++i) put_le<std::uint8_t>(out, 0);
    put_le<std::uint64_t>(out, index.minimizers().size());
    put_le<std::uint64_t>(out, index.locations().size());
    for (auto b : index.buckets()) put_le<std::uint32_t>(out, b);
    for (const auto& m : index.minimizers()) {
        const std::uint64_t low = m.hash & ((std::uint64_t{1} << 48) - 1);
        for (int i = 0; i < 6; ++i) put_le<std::uint8_t>(out, static_cast<std::uint8_t>(low >> (8 * i)));
        for (int i = 0; i < 3; ++i) put_le<std::uint8_t>(out, static_cast<std::uint8_t>(m.location_start >> (8 * i)));
        for (int i = 0; i < 3; ++i) put_le<std::uint8_t>(out, static_cast<std::uint8_t>(m.location_count >> (8 * i)));
    }
    for (const auto& loc : index.locations()) {
        put_le<std::uint32_t>(out, loc.node);
        put_le<std::uint32_t>(out, loc.offset);
    }
}

MinimizerIndex read_index(std::istream& in) {
    using detail::get_le;
    detail::expect_magic(in, "BGIX");
    const auto version = get_le<std::uint16_t>(in, "the header");
    if (version != kIndexFormatVersion) {
        throw Error(ErrorCode::VersionMismatch, "index format version " + std::to_string(version) + ", expected " +
                                                    std::to_string(kIndexFormatVersion));
    }
    MinimizerIndex idx;
    idx.k_ = get_le<std::uint8_t>(in, "the header");
    idx.w_ = get_le<std::uint8_t>(in, "the header");
    idx.bucket_bits_ = get_le<std::uint8_t>(in, "the header");
    for (int i = 0; i < 3; ++i) (void)get_le<std::uint8_t>(in, "the header");
    check_bucket_bits(idx.bucket_bits_);
    const auto nmin = get_le<std::uint64_t>(in, "the header");
    const auto nloc = get_le<std::uint64_t>(in, "the header");
    if (nmin > kMax24 + 1ULL || nloc > (std::uint64_t{1} << 32)) {
        throw Error(ErrorCode::MalformedRecord, "implausible index table sizes");
    }

    idx.buckets_.resize(std::size_t{1} << idx.bucket_bits_);
    for (auto& b : idx.buckets_) b = get_le<std::uint32_t>(in, "the bucket table");
    for (std::size_t b = 0; b < idx.buckets_.size(); ++b) {
        if (idx.buckets_[b] > nmin || (b > 0 && idx.buckets_[b] < idx.buckets_[b - 1])) {
            throw Error(ErrorCode::MalformedRecord, "bucket table is not monotone");
        }
    }
    idx.minimizers_.resize(nmin);
    std::size_t mi = 0;
    for (auto& m : idx.minimizers_) {
        std::uint64_t low = 0;
        for (int i = 0; i < 6; ++i) low |= std::uint64_t{get_le<std::uint8_t>(in, "the minimizer table")} << (8 * i);
        std::uint32_t start = 0, count = 0;
        for (int i = 0; i < 3; ++i) start |= std::uint32_t{get_le<std::uint8_t>(in, "the minimizer table")} << (8 * i);
        for (int i = 0; i < 3; ++i) count |= std::uint32_t{get_le<std::uint8_t>(in, "the minimizer table")} << (8 * i);
        // The bucket holding record mi supplies the top bits of the hash.
        const auto it = std::upper_bound(idx.buckets_.begin(), idx.buckets_.end(), static_cast<std::uint32_t>(mi));
        const std::uint64_t bucket = static_cast<std::uint64_t>(it - idx.buckets_.begin()) - 1;
        const unsigned low_bits = 64 - idx.bucket_bits_;
        m.hash = (bucket << low_bits) | (low & ((std::uint64_t{1} << low_bits) - 1));
        m.location_start = start;
        m.location_count = count;
        if (std::uint64_t{start} + count > nloc) throw Error(ErrorCode::MalformedRecord, "location run out of range");
        ++mi;
    }
    idx.locations_.resize(nloc);
    for (auto& loc : idx.locations_) {
        loc.node = get_le<std::uint32_t>(in, "the location table");
        loc.offset = get_le<std::uint32_t>(in, "the location table");
    }
    return idx;
}

void save_index(const std::string& path, const MinimizerIndex& index) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    write_index(out, index);
    if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

MinimizerIndex load_index(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    return read_index(in);
}

std::optional<std::string> index_param_mismatch(const MinimizerIndex& index, const MinimizerParams& params) {
    if (index.k() == params.k && index.w() == params.w) return std::nullopt;
    return "index was built with k=" + std::to_string(index.k()) + " w=" + std::to_string(index.w()) +
           " but k=" + std::to_string(params.k) + " w=" + std::to_string(params.w) + " was requested";
}

} // namespace bitgraph
