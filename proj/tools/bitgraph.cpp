#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bitgraph/bitalign.hpp"
#include "bitgraph/errors.hpp"
#include "bitgraph/fastx.hpp"
#include "bitgraph/genasm_dc.hpp"
#include "bitgraph/genasm_tb.hpp"
#include "bitgraph/gindex.hpp"
#include "bitgraph/graph.hpp"
#include "bitgraph/mapper.hpp"
#include "bitgraph/perf_model.hpp"
#include "bitgraph/simulate.hpp"

using namespace bitgraph;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;
constexpr int kExitInternal = 3;

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidParameter:
    case ErrorCode::EmptyPattern: return kExitUsage;
    case ErrorCode::DeadEnd:
    case ErrorCode::ZeroProgress: return kExitInternal;
    default: return kExitFormat;
    }
}

/// GFA text or the packed binary form, told apart by the leading magic.
GenomeGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    char magic[4] = {};
    in.read(magic, 4);
    in.clear();
    in.seekg(0);
    if (std::string(magic, 4) == "BGGR") return read_graph_binary(in);
    return parse_gfa(in, path);
}

/// A literal sequence, or the first record of a FASTA/FASTQ file when prefixed with '@'.
std::string sequence_arg(const std::string& arg) {
    if (arg.size() > 1 && arg[0] == '@') {
        auto recs = read_fastx_file(arg.substr(1));
        if (recs.empty()) throw Error(ErrorCode::MalformedRecord, arg.substr(1) + ": no records");
        return recs.front().sequence;
    }
    return arg;
}

TbOrdering ordering_arg(const std::string& s) { return TbOrdering::parse(s); }

struct IndexOpts {
    std::string graph;
    std::string out;
    unsigned k = 15;
    unsigned w = 10;
    unsigned bucket_bits = kDefaultBucketBits;
};

struct MapOpts {
    std::string index;
    std::string graph;
    std::string reads;
    unsigned k = 15;
    unsigned w = 10;
    std::size_t freq_threshold = 512;
    std::optional<double> error_rate;
    std::string preset = "long";
    std::size_t window = 64;
    std::size_t overlap = 24;
    std::string ordering = "affine";
    unsigned threads = 1;
    bool hardware_faithful = false;
    std::size_t batch = 4096;
};

struct PairOpts {
    std::string ref;
    std::string read;
    double error_rate = 0.10;
    int k = -1;
    int window_k = -1;
    std::size_t window = 64;
    std::size_t overlap = 24;
    std::string ordering = "affine";
    bool hardware_faithful = false;
    bool extended = false;
};

int run_index(const IndexOpts& o) {
    const auto g = load_graph(o.graph);
    const auto idx = build_index(g, MinimizerParams{o.k, o.w, 512}, o.bucket_bits);
    save_index(o.out, idx);
    std::cout << "nodes\t" << g.node_count() << "\nedges\t" << g.edge_count() << "\nminimizers\t"
              << idx.minimizers().size() << "\nlocations\t" << idx.locations().size() << "\nbytes\t"
              << idx.serialized_size() << '\n';
    return 0;
}

int run_map(const MapOpts& o) {
    const auto g = load_graph(o.graph);
    const auto idx = load_index(o.index);
    MapperParams p;
    p.minimizers = {o.k, o.w, o.freq_threshold};
    if (auto warn = index_param_mismatch(idx, p.minimizers)) {
        std::cerr << "warning: " << *warn << "; using the index values\n";
        p.minimizers.k = idx.k();
        p.minimizers.w = idx.w();
    }
    p.error_rate = o.error_rate.value_or(o.preset == "short" ? 0.01 : 0.10);
    p.ordering = ordering_arg(o.ordering);
    p.threads = std::max(1u, o.threads);
    if (o.hardware_faithful) {
        p.hop_limit = 12;
        p.hop_policy = HopPolicy::HardwareFaithful;
    }
    const Mapper mapper(g, idx, p);

    std::ifstream in(o.reads);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + o.reads);
    FastxReader reader(in, o.reads);
    std::vector<std::pair<std::string, std::string>> batch;
    std::size_t total = 0, mapped = 0;
    auto flush = [&] {
        for (const auto& rec : mapper.map_batch(batch)) {
            std::cout << format_record(rec, g) << '\n';
            if (!rec.mapped) std::cerr << rec.read_name << ": " << rec.note << '\n';
            mapped += rec.mapped;
        }
        total += batch.size();
        batch.clear();
    };
    while (auto rec = reader.next()) {
        batch.emplace_back(std::move(rec->name), std::move(rec->sequence));
        if (batch.size() >= o.batch) flush();
    }
    flush();
    std::cerr << "mapped " << mapped << " of " << total << " reads\n";
    return 0;
}

int run_align(const PairOpts& o) {
    const auto text = EncodedSequence::encode(sequence_arg(o.ref));
    const auto pattern = EncodedSequence::encode(sequence_arg(o.read));
    TbParams p = o.hardware_faithful ? TbParams::hardware_preset() : TbParams{};
    if (!o.hardware_faithful) {
        p.window = o.window;
        p.overlap = o.overlap;
    }
    p.error_rate = o.error_rate;
    p.max_edits = o.k;
    if (o.window_k >= 0) p.per_window_k = o.window_k;
    p.ordering = ordering_arg(o.ordering);
    try {
        const auto aln = align_windowed(text, pattern, p);
        std::cout << aln.start << '\t' << aln.start + aln.text_span << '\t' << aln.distance << '\t'
                  << aln.cigar.to_string(o.extended) << '\n';
    } catch (const Error& e) {
        if (e.code() != ErrorCode::WindowFailure && e.code() != ErrorCode::NoAlignmentWithinK) throw;
        std::cout << "*\t*\t*\t*\t" << error_code_name(e.code()) << '\n';
    }
    return 0;
}

int run_dist(const PairOpts& o) {
    const auto text = EncodedSequence::encode(sequence_arg(o.ref));
    const auto pattern = EncodedSequence::encode(sequence_arg(o.read));
    const int k = o.k >= 0 ? o.k : static_cast<int>(pattern.size());
    const auto r = dc_scan(text, generate_pattern_bitmasks(pattern), DcParams{k});
    if (r.distance) {
        std::cout << *r.distance << '\t' << *r.start << '\n';
    } else {
        std::cout << "none\t*\n";
    }
    return 0;
}

int run_filter(const PairOpts& o, int threshold) {
    const auto d = filter_pair(EncodedSequence::encode(sequence_arg(o.ref)), EncodedSequence::encode(sequence_arg(o.read)),
                               threshold);
    std::cout << (d.accept ? "accept " : "reject ") << d.distance << '\n';
    return 0;
}

int run_perf(const PerfModelParams& p) {
    const auto e = estimate_performance(p);
    std::cout << "windows\t" << e.windows << "\ndc_cycles_per_window\t" << e.dc_cycles_per_window << "\ndc_cycles\t"
              << e.dc_cycles << "\ntb_cycles\t" << e.tb_cycles << "\nstored_vectors\t" << e.stored_vectors
              << "\ntrace_bytes_per_window\t" << e.trace_bytes_per_window << '\n';
    if (e.exact_match_path) std::cout << "note\texact match: shift-or only, no error rows\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bit-parallel sequence and genome-graph alignment"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "bitgraph 0.3.0");

    IndexOpts io;
    auto* index = app.add_subcommand("index", "Build a minimizer index from a GFA or packed graph");
    index->add_option("graph", io.graph, "Graph file")->required()->check(CLI::ExistingFile);
    index->add_option("-o,--output", io.out, "Index output path")->required();
    index->add_option("-k", io.k, "k-mer length")->check(CLI::Range(1, 31));
    index->add_option("-w", io.w, "Window size in k-mers")->check(CLI::Range(1, 255));
    index->add_option("--bucket-bits", io.bucket_bits, "Bucket table bits")
        ->check(CLI::Range(kMinBucketBits, kMaxBucketBits));

    MapOpts mo;
    auto* map = app.add_subcommand("map", "Map reads to a genome graph");
    map->add_option("-x,--index", mo.index, "Index file")->required()->check(CLI::ExistingFile);
    map->add_option("-g,--graph", mo.graph, "Graph file")->required()->check(CLI::ExistingFile);
    map->add_option("reads", mo.reads, "FASTA/FASTQ reads")->required()->check(CLI::ExistingFile);
    map->add_option("-k", mo.k, "k-mer length (must match the index)")->check(CLI::Range(1, 31));
    map->add_option("-w", mo.w, "Window size (must match the index)")->check(CLI::Range(1, 255));
    map->add_option("--freq-threshold", mo.freq_threshold, "Drop minimizers occurring more often")->capture_default_str();
    map->add_option("--error-rate", mo.error_rate, "Expected error rate (default 0.10 long, 0.01 short)")
        ->check(CLI::Range(0.0, 0.99));
    map->add_option("--preset", mo.preset, "Read type")->check(CLI::IsMember({"long", "short"}))->capture_default_str();
    map->add_option("--window", mo.window, "Accepted for symmetry with align; graph alignment is unwindowed");
    map->add_option("--overlap", mo.overlap, "Accepted for symmetry with align; graph alignment is unwindowed");
    map->add_option("--ordering", mo.ordering, "Traceback ordering: affine, sdi or a permutation of s/i/d")
        ->capture_default_str();
    map->add_option("--threads", mo.threads, "Worker threads")->check(CLI::PositiveNumber);
    map->add_flag("--hardware-faithful", mo.hardware_faithful, "Hop limit 12; longer hops fail the candidate");
    map->add_option("--batch", mo.batch, "Reads per batch")->check(CLI::PositiveNumber);

    PairOpts po;
    int threshold = 0;
    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("ref", po.ref, "Reference sequence, or @file")->required();
        sub->add_option("read", po.read, "Read sequence, or @file")->required();
    };
    auto* align = app.add_subcommand("align", "Windowed alignment of a read against a reference");
    add_pair(align);
    align->add_option("--error-rate", po.error_rate, "Error rate for the start threshold")->check(CLI::Range(0.0, 0.99));
    align->add_option("-k,--max-edits", po.k, "Start threshold (default ceil(E*m))");
    align->add_option("--per-window-k", po.window_k, "Edit threshold per window (default W-1)")
        ->check(CLI::NonNegativeNumber);
    align->add_option("--window", po.window, "Window size W")->check(CLI::Range(2, 4096));
    align->add_option("--overlap", po.overlap, "Window overlap O")->check(CLI::Range(1, 4095));
    align->add_option("--ordering", po.ordering, "Traceback ordering")->capture_default_str();
    align->add_flag("--hardware-faithful", po.hardware_faithful, "W=60, 15 edits per window");
    align->add_flag("--extended-cigar", po.extended, "Print substitutions as X");

    auto* dist = app.add_subcommand("dist", "Semi-global edit distance of a read against a reference");
    add_pair(dist);
    dist->add_option("-k,--max-edits", po.k, "Edit threshold (default read length)");

    auto* filter = app.add_subcommand("filter", "Accept or reject a pair by edit threshold");
    add_pair(filter);
    filter->add_option("-t,--threshold", threshold, "Edit threshold")->required()->check(CLI::NonNegativeNumber);

    PerfModelParams pp;
    std::string stored = "3";
    auto* perf = app.add_subcommand("perf", "Cycle and storage estimates for the accelerator model");
    perf->add_option("-m", pp.m, "Pattern length")->capture_default_str();
    perf->add_option("-k", pp.k, "Edit threshold")->capture_default_str();
    perf->add_option("-n", pp.n, "Text length");
    perf->add_option("--window", pp.window, "Window size W")->capture_default_str();
    perf->add_option("--overlap", pp.overlap, "Window overlap O")->capture_default_str();
    perf->add_option("--pe-count", pp.pe_count, "Processing elements P")->capture_default_str();
    perf->add_option("--pe-bits", pp.pe_bits, "Bits per processing element")->capture_default_str();
    perf->add_option("--stored", stored, "Stored vectors per cell: 1, 2, 3 or 4")
        ->check(CLI::IsMember({"1", "2", "3", "4"}))
        ->capture_default_str();

    std::string sim_graph;
    SimulationParams sp;
    sp.seed = seed_from_env(1);
    auto* sim = app.add_subcommand("simulate", "Sample reads along graph paths (seed from BITGRAPH_SEED)");
    sim->add_option("graph", sim_graph, "Graph file")->required()->check(CLI::ExistingFile);
    sim->add_option("-n,--count", sp.read_count, "Reads")->capture_default_str();
    sim->add_option("-l,--length", sp.read_length, "Read length")->capture_default_str();
    sim->add_option("--error-rate", sp.error_rate, "Edit rate")->check(CLI::Range(0.0, 0.99));

    std::string pack_in, pack_out;
    auto* pack = app.add_subcommand("pack", "Convert a GFA file to the packed binary graph");
    pack->add_option("gfa", pack_in, "GFA file")->required()->check(CLI::ExistingFile);
    pack->add_option("-o,--output", pack_out, "Output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*index) return run_index(io);
        if (*map) return run_map(mo);
        if (*align) return run_align(po);
        if (*dist) return run_dist(po);
        if (*filter) return run_filter(po, threshold);
        if (*perf) {
            static constexpr StoredVectors kSets[] = {StoredVectors::StatusOnly, StoredVectors::MatchDel,
                                                      StoredVectors::MatchInsDel, StoredVectors::All};
            pp.stored = kSets[std::stoi(stored) - 1];
            return run_perf(pp);
        }
        if (*sim) {
            const auto g = load_graph(sim_graph);
            for (const auto& r : simulate_reads(g, sp)) std::cout << '>' << r.name << '\n' << r.sequence << '\n';
            return 0;
        }
        if (*pack) {
            const auto g = load_gfa(pack_in);
            std::ofstream out(pack_out, std::ios::binary);
            if (!out) throw Error(ErrorCode::Io, "cannot write " + pack_out);
            write_graph_binary(out, g);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
