#include "bitgraph/errors.hpp"

namespace bitgraph {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::WindowFailure: return "WindowFailure";
    case ErrorCode::ZeroProgress: return "ZeroProgress";
    case ErrorCode::DeadEnd: return "DeadEnd";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::UnsupportedOrientation: return "UnsupportedOrientation";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::AnchorOutOfRange: return "AnchorOutOfRange";
    case ErrorCode::HopOverflow: return "HopOverflow";
    case ErrorCode::NoAlignmentWithinK: return "NoAlignmentWithinK";
    case ErrorCode::ReadTooShort: return "ReadTooShort";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::TruncatedFile: return "TruncatedFile";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

} // namespace bitgraph
