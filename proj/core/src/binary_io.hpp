#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <type_traits>

#include "bitgraph/errors.hpp"

namespace bitgraph::detail {

template <typename T>
void put_le(std::ostream& out, T value) {
    static_assert(std::is_unsigned_v<T>);
    std::array<char, sizeof(T)> bytes{};
    for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
    out.write(bytes.data(), bytes.size());
}

template <typename T>
T get_le(std::istream& in, const char* what) {
    static_assert(std::is_unsigned_v<T>);
    std::array<unsigned char, sizeof(T)> bytes{};
    in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
    if (in.gcount() != static_cast<std::streamsize>(bytes.size())) {
        throw Error(ErrorCode::TruncatedFile, std::string("stream ended inside ") + what);
    }
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(static_cast<T>(bytes[i]) << (8 * i));
    return value;
}

inline void expect_magic(std::istream& in, const char (&magic)[5]) {
    char got[4] = {};
    in.read(got, 4);
    if (in.gcount() != 4) throw Error(ErrorCode::TruncatedFile, "stream ended inside the header");
    for (int i = 0; i < 4; ++i) {
        if (got[i] != magic[i]) throw Error(ErrorCode::BadMagic, std::string("expected '") + magic + "' magic");
    }
}

} // namespace bitgraph::detail
