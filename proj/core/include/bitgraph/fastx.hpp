#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bitgraph {

struct FastxRecord {
    std::string name;
    std::string sequence;
};

/// Minimal FASTA/FASTQ reader: the format is chosen per record from its
/// first character ('>' or '@'); FASTA sequences may span lines, FASTQ
/// quality lines are skipped. Names stop at the first whitespace.
class FastxReader {
public:
    explicit FastxReader(std::istream& in, std::string source = "<input>");

    std::optional<FastxRecord> next();

private:
    std::istream& in_;
    std::string source_;
    std::string pending_;
    bool has_pending_ = false;
    std::size_t line_ = 0;

    bool read_line(std::string& line);
};

std::vector<FastxRecord> read_fastx_file(const std::string& path);

} // namespace bitgraph
