#include "bitgraph/perf_model.hpp"

#include <algorithm>

#include "bitgraph/errors.hpp"

namespace bitgraph {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

} // namespace

void PerfModelParams::validate() const {
    if (m == 0 || window == 0 || overlap == 0 || pe_count == 0 || pe_bits == 0) {
        throw Error(ErrorCode::InvalidParameter, "m, W, O, P and w must be positive");
    }
    if (overlap >= window) throw Error(ErrorCode::InvalidParameter, "overlap must be smaller than the window");
}

PerfEstimate estimate_performance(const PerfModelParams& p) {
    p.validate();
    PerfEstimate e;
    const std::uint64_t step = p.window - p.overlap;
    e.windows = ceil_div(p.m + p.k, step);
    e.dc_cycles_per_window = ceil_div(p.window * p.window * std::min(p.window, p.k), p.pe_count * p.pe_bits);
    e.dc_cycles = e.dc_cycles_per_window * e.windows;
    e.tb_cycles = step * e.windows;
    e.stored_vectors = stored_vector_count(p.stored);
    e.trace_bytes_per_window = p.window * e.stored_vectors * p.window * p.window / 8;
    e.exact_match_path = p.k == 0;
    return e;
}

} // namespace bitgraph
