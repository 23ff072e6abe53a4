#pragma once

#include <cstddef>
#include <cstdint>

#include "bitgraph/genasm_dc.hpp"

namespace bitgraph {

struct PerfModelParams {
    std::uint64_t m = 10000; ///< pattern length
    std::uint64_t k = 1500;  ///< edit threshold
    std::uint64_t n = 0;     ///< text length (reported only)
    std::uint64_t window = 64;
    std::uint64_t overlap = 24;
    std::uint64_t pe_count = 64;  ///< P
    std::uint64_t pe_bits = 64;   ///< w, bits per processing element
    StoredVectors stored = StoredVectors::MatchInsDel;

    void validate() const;
};

struct PerfEstimate {
    std::uint64_t windows = 0;                  ///< ceil((m+k)/(W-O))
    std::uint64_t dc_cycles_per_window = 0;     ///< ceil(W*W*min(W,k)/(P*w))
    std::uint64_t dc_cycles = 0;
    std::uint64_t tb_cycles = 0;                ///< (W-O) * windows
    std::uint64_t trace_bytes_per_window = 0;   ///< W*S*W*W/8
    unsigned stored_vectors = 0;                ///< S
    bool exact_match_path = false;              ///< k == 0: shift-or only, no inner d loop
};

PerfEstimate estimate_performance(const PerfModelParams& p);

} // namespace bitgraph
