#include "bitgraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "binary_io.hpp"
#include "bitgraph/errors.hpp"
#include "bitgraph/sequence.hpp"

namespace bitgraph {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        const auto tab = line.find('\t', pos);
        const auto end = tab == std::string_view::npos ? line.size() : tab;
        fields.push_back(line.substr(pos, end - pos));
        if (tab == std::string_view::npos) break;
        pos = tab + 1;
    }
    return fields;
}

std::string where(std::string_view source, std::size_t line) {
    return std::string(source) + ":" + std::to_string(line) + ": ";
}

} // namespace

GenomeGraph GenomeGraph::from_nodes(const std::vector<std::string>& sequences,
                                    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
                                    std::vector<std::string> names) {
    const std::size_t n = sequences.size();
    if (names.empty()) {
        names.reserve(n);
        for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    }
    if (names.size() != n) throw Error(ErrorCode::InvalidParameter, "one name per node required");

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw Error(ErrorCode::InvalidParameter, "edge refers to a missing node");
        if (u >= v) {
            throw Error(ErrorCode::CyclicGraph, "edge " + names[u] + " -> " + names[v] + " breaks topological order");
        }
    }

    GenomeGraph g;
    g.names_ = std::move(names);
    g.nodes_.resize(n);
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sequences[i].size() > kMaxNodeLength) {
            throw Error(ErrorCode::InvalidParameter, "node " + g.names_[i] + " exceeds the 16384 bp node limit");
        }
        total += sequences[i].size();
    }
    g.total_bases_ = total;
    g.packed_.assign((total + 31) / 32, 0);

    std::size_t offset = 0;
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i) {
        auto& rec = g.nodes_[i];
        rec.seq_len = static_cast<std::uint32_t>(sequences[i].size());
        rec.seq_offset = offset;
        rec.edges_offset = e;
        for (char c : sequences[i]) {
            const auto code = base_to_code(c);
            if (code == kAmbiguousCode) {
                throw Error(ErrorCode::InvalidCharacter, "node " + g.names_[i] + " contains non-ACGT base '" +
                                                             std::string(1, c) + "'");
            }
            g.packed_[offset / 32] |= std::uint64_t{code} << (2 * (offset % 32));
            ++offset;
        }
        while (e < edges.size() && edges[e].first == i) {
            g.edges_.push_back(edges[e].second);
            ++e;
        }
        rec.out_degree = static_cast<std::uint32_t>(e - rec.edges_offset);
    }
    g.build_predecessors();
    return g;
}

void GenomeGraph::build_predecessors() {
    const std::size_t n = nodes_.size();
    pred_offsets_.assign(n + 1, 0);
    for (auto v : edges_) ++pred_offsets_[v + 1];
    for (std::size_t i = 0; i < n; ++i) pred_offsets_[i + 1] += pred_offsets_[i];
    preds_.assign(edges_.size(), 0);
    auto fill = pred_offsets_;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (auto v : successors(u)) preds_[fill[v]++] = u;
    }
}

std::uint8_t GenomeGraph::base(std::uint32_t id, std::uint32_t offset) const noexcept {
    const std::size_t pos = nodes_[id].seq_offset + offset;
    return static_cast<std::uint8_t>((packed_[pos / 32] >> (2 * (pos % 32))) & 3u);
}

std::string GenomeGraph::node_sequence(std::uint32_t id) const {
    std::string out(node_length(id), 'A');
    for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = code_to_base(base(id, i));
    return out;
}

std::span<const std::uint32_t> GenomeGraph::successors(std::uint32_t id) const noexcept {
    const auto& rec = nodes_[id];
    return {edges_.data() + rec.edges_offset, rec.out_degree};
}

std::span<const std::uint32_t> GenomeGraph::predecessors(std::uint32_t id) const noexcept {
    return {preds_.data() + pred_offsets_[id], pred_offsets_[id + 1] - pred_offsets_[id]};
}

std::optional<std::uint32_t> GenomeGraph::find_node(std::string_view name) const {
    for (std::uint32_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

GenomeGraph parse_gfa(std::istream& in, std::string_view source) {
    std::vector<std::string> names;
    std::vector<std::string> seqs;
    std::unordered_map<std::string, std::uint32_t> index;
    struct Link {
        std::string from, to;
        std::size_t line;
    };
    std::vector<Link> links;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto f = split_tabs(line);
        if (f[0] == "S") {
            if (f.size() < 3 || f[1].empty()) {
                throw Error(ErrorCode::MalformedRecord, where(source, line_no) + "S record needs a name and a sequence");
            }
            if (f[2] == "*" || f[2].empty()) {
                throw Error(ErrorCode::MalformedRecord, where(source, line_no) + "segment " + std::string(f[1]) + " has no sequence");
            }
            std::string seq(f[2]);
            for (auto& c : seq) {
                if (base_to_code(c) == kAmbiguousCode) {
                    throw Error(ErrorCode::MalformedRecord, where(source, line_no) + "segment " + std::string(f[1]) +
                                                                " contains non-ACGT base '" + std::string(1, c) + "'");
                }
                c = code_to_base(base_to_code(c));
            }
            if (seq.size() > kMaxNodeLength) {
                throw Error(ErrorCode::MalformedRecord, where(source, line_no) + "segment " + std::string(f[1]) +
                                                            " is longer than 16384 bp");
            }
            const std::string name(f[1]);
            if (!index.emplace(name, static_cast<std::uint32_t>(names.size())).second) {
                throw Error(ErrorCode::MalformedRecord, where(source, line_no) + "duplicate segment " + name);
            }
            names.push_back(name);
            seqs.push_back(std::move(seq));
        } else if (f[0] == "L") {
            if (f.size() < 5) throw Error(ErrorCode::MalformedRecord, where(source, line_no) + "L record needs 5 fields");
            if ((f[2] != "+" && f[2] != "-") || (f[4] != "+" && f[4] != "-")) {
                throw Error(ErrorCode::MalformedRecord, where(source, line_no) + "bad orientation field");
            }
            if (f[2] != "+" || f[4] != "+") {
                throw Error(ErrorCode::UnsupportedOrientation, where(source, line_no) + "only +/+ links are supported");
            }
            if (f.size() >= 6 && f[5] != "0M" && f[5] != "*" && f[5] != "0") {
                throw Error(ErrorCode::MalformedRecord, where(source, line_no) + "overlapping links are not supported");
            }
            links.push_back({std::string(f[1]), std::string(f[3]), line_no});
        }
    }

    const std::size_t n = names.size();
    std::vector<std::vector<std::uint32_t>> out(n);
    std::vector<std::uint32_t> indeg(n, 0);
    for (const auto& l : links) {
        const auto a = index.find(l.from);
        const auto b = index.find(l.to);
        if (a == index.end() || b == index.end()) {
            throw Error(ErrorCode::MalformedRecord, where(source, l.line) + "link refers to an unknown segment");
        }
        if (a->second == b->second) {
            throw Error(ErrorCode::CyclicGraph, where(source, l.line) + "self-loop on segment " + l.from);
        }
        auto& lst = out[a->second];
        if (std::find(lst.begin(), lst.end(), b->second) == lst.end()) {
            lst.push_back(b->second);
            ++indeg[b->second];
        }
    }

    // Kahn's algorithm, always taking the earliest input segment available.
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (indeg[i] == 0) ready.push(i);
    }
    std::vector<std::uint32_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        const auto u = ready.top();
        ready.pop();
        order.push_back(u);
        for (auto v : out[u]) {
            if (--indeg[v] == 0) ready.push(v);
        }
    }
    if (order.size() != n) throw Error(ErrorCode::CyclicGraph, std::string(source) + ": graph contains a cycle");

    std::vector<std::uint32_t> rank(n);
    for (std::uint32_t i = 0; i < n; ++i) rank[order[i]] = i;
    std::vector<std::string> sorted_seqs(n), sorted_names(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        sorted_seqs[rank[i]] = std::move(seqs[i]);
        sorted_names[rank[i]] = std::move(names[i]);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (auto v : out[u]) edges.emplace_back(rank[u], rank[v]);
    }
    return GenomeGraph::from_nodes(sorted_seqs, std::move(edges), std::move(sorted_names));
}

GenomeGraph load_gfa(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    return parse_gfa(in, path);
}

void write_gfa(std::ostream& out, const GenomeGraph& graph) {
    out << "H\tVN:Z:1.0\n";
    for (std::uint32_t i = 0; i < graph.node_count(); ++i) {
        out << "S\t" << graph.name(i) << '\t' << graph.node_sequence(i) << '\n';
    }
    for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
        for (auto v : graph.successors(u)) out << "L\t" << graph.name(u) << "\t+\t" << graph.name(v) << "\t+\t0M\n";
    }
}

void write_graph_binary(std::ostream& out, const GenomeGraph& graph) {
    using detail::put_le;
    out.write("BGGR", 4);
    put_le<std::uint16_t>(out, kGraphFormatVersion);
    put_le<std::uint16_t>(out, 0);
    put_le<std::uint64_t>(out, graph.node_count());
    put_le<std::uint64_t>(out, graph.total_bases());
    put_le<std::uint64_t>(out, graph.edge_count());
    for (const auto& rec : graph.nodes_table()) {
        put_le<std::uint32_t>(out, rec.seq_len);
        put_le<std::uint32_t>(out, rec.out_degree);
        put_le<std::uint64_t>(out, rec.seq_offset);
        put_le<std::uint64_t>(out, rec.edges_offset);
        put_le<std::uint64_t>(out, rec.reserved);
    }
    for (auto w : graph.sequences_table()) put_le<std::uint64_t>(out, w);
    for (auto e : graph.edges_table()) put_le<std::uint32_t>(out, e);
    for (std::uint32_t i = 0; i < graph.node_count(); ++i) {
        const auto& name = graph.name(i);
        put_le<std::uint32_t>(out, static_cast<std::uint32_t>(name.size()));
        out.write(name.data(), static_cast<std::streamsize>(name.size()));
    }
}

GenomeGraph read_graph_binary(std::istream& in) {
    using detail::get_le;
    detail::expect_magic(in, "BGGR");
    const auto version = get_le<std::uint16_t>(in, "the header");
    if (version != kGraphFormatVersion) {
        throw Error(ErrorCode::VersionMismatch, "graph format version " + std::to_string(version) + ", expected " +
                                                    std::to_string(kGraphFormatVersion));
    }
    (void)get_le<std::uint16_t>(in, "the header");
    const auto n = get_le<std::uint64_t>(in, "the header");
    const auto bases = get_le<std::uint64_t>(in, "the header");
    const auto m = get_le<std::uint64_t>(in, "the header");
    constexpr std::uint64_t kSanity = std::uint64_t{1} << 40;
    if (n > kSanity || bases > kSanity || m > kSanity) throw Error(ErrorCode::MalformedRecord, "implausible table sizes");

    GenomeGraph g;
    g.total_bases_ = bases;
    g.nodes_.resize(n);
    for (auto& rec : g.nodes_) {
        rec.seq_len = get_le<std::uint32_t>(in, "the nodes table");
        rec.out_degree = get_le<std::uint32_t>(in, "the nodes table");
        rec.seq_offset = get_le<std::uint64_t>(in, "the nodes table");
        rec.edges_offset = get_le<std::uint64_t>(in, "the nodes table");
        rec.reserved = get_le<std::uint64_t>(in, "the nodes table");
    }
    g.packed_.resize((bases + 31) / 32);
    for (auto& w : g.packed_) w = get_le<std::uint64_t>(in, "the sequences table");
    g.edges_.resize(m);
    for (auto& e : g.edges_) e = get_le<std::uint32_t>(in, "the edges table");
    g.names_.resize(n);
    for (auto& name : g.names_) {
        const auto len = get_le<std::uint32_t>(in, "the names section");
        name.resize(len);
        in.read(name.data(), len);
        if (in.gcount() != static_cast<std::streamsize>(len)) {
            throw Error(ErrorCode::TruncatedFile, "stream ended inside the names section");
        }
    }

    // Offsets must partition both tables and edges must respect the order.
    std::uint64_t seq = 0, edge = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto& rec = g.nodes_[i];
        if (rec.seq_offset != seq || rec.edges_offset != edge || rec.seq_len > kMaxNodeLength) {
            throw Error(ErrorCode::MalformedRecord, "node " + std::to_string(i) + " has inconsistent offsets");
        }
        seq += rec.seq_len;
        edge += rec.out_degree;
        for (std::uint64_t e = rec.edges_offset; e < rec.edges_offset + rec.out_degree && e < m; ++e) {
            if (g.edges_[e] <= i || g.edges_[e] >= n) {
                throw Error(ErrorCode::MalformedRecord, "edge from node " + std::to_string(i) + " is out of order");
            }
        }
    }
    if (seq != bases || edge != m) throw Error(ErrorCode::MalformedRecord, "tables are not partitioned by the nodes");
    g.build_predecessors();
    return g;
}

} // namespace bitgraph
