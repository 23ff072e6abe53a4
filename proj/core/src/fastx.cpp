#include "bitgraph/fastx.hpp"

#include <fstream>
#include <istream>

#include "bitgraph/errors.hpp"

namespace bitgraph {

namespace {

std::string first_word(const std::string& header) {
    const auto end = header.find_first_of(" \t", 1);
    return header.substr(1, end == std::string::npos ? std::string::npos : end - 1);
}

} // namespace

FastxReader::FastxReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

bool FastxReader::read_line(std::string& line) {
    if (has_pending_) {
        line = std::move(pending_);
        has_pending_ = false;
        return true;
    }
    if (!std::getline(in_, line)) return false;
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

std::optional<FastxRecord> FastxReader::next() {
    std::string line;
    do {
        if (!read_line(line)) return std::nullopt;
    } while (line.empty());

    FastxRecord rec;
    if (line[0] == '>') {
        rec.name = first_word(line);
        while (read_line(line)) {
            if (!line.empty() && line[0] == '>') {
                pending_ = std::move(line);
                has_pending_ = true;
                break;
            }
            rec.sequence += line;
        }
        return rec;
    }
    if (line[0] == '@') {
        rec.name = first_word(line);
        std::string plus, qual;
        if (!read_line(rec.sequence) || !read_line(plus) || plus.empty() || plus[0] != '+' || !read_line(qual)) {
            throw Error(ErrorCode::MalformedRecord, source_ + ":" + std::to_string(line_) + ": truncated FASTQ record");
        }
        return rec;
    }
    throw Error(ErrorCode::MalformedRecord, source_ + ":" + std::to_string(line_) + ": expected '>' or '@'");
}

std::vector<FastxRecord> read_fastx_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    FastxReader reader(in, path);
    std::vector<FastxRecord> out;
    while (auto rec = reader.next()) out.push_back(std::move(*rec));
    return out;
}

} // namespace bitgraph
