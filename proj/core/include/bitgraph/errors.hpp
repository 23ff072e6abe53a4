#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bitgraph {

enum class ErrorCode {
    InvalidCharacter,
    EmptyPattern,
    InvalidParameter,
    WindowFailure,
    ZeroProgress,
    DeadEnd,
    CyclicGraph,
    UnsupportedOrientation,
    MalformedRecord,
    AnchorOutOfRange,
    HopOverflow,
    NoAlignmentWithinK,
    ReadTooShort,
    BadMagic,
    VersionMismatch,
    TruncatedFile,
    Io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` identifies the failure class.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace bitgraph
