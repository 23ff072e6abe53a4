#include <doctest.h>

#include <random>
#include <vector>

#include "bitgraph/bitvector.hpp"
#include "bitgraph/pattern.hpp"
#include "random.hpp"

using namespace bitgraph;

namespace {

using Bits = std::vector<bool>; // index = bit position

MultiWordBitvector from_bits(const Bits& b) {
    MultiWordBitvector v(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) v.set(i, b[i]);
    return v;
}

Bits to_bits(const MultiWordBitvector& v) {
    Bits b(v.bit_length());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = v.test(i);
    return b;
}

Bits random_bits(std::mt19937_64& rng, std::size_t n) {
    Bits b(n);
    for (std::size_t i = 0; i < n; ++i) b[i] = rng() & 1;
    return b;
}

bool canonical(const MultiWordBitvector& v) {
    const auto words = v.words();
    return (words.back() & ~top_word_mask(v.bit_length())) == 0;
}

} // namespace

TEST_CASE("shift of 0001 gives 0010") {
    CHECK(MultiWordBitvector::from_string("0001").shifted_left().to_string() == "0010");
}

TEST_CASE("shift carries across a word boundary") {
    // 130 bits; pattern index 64 moves to pattern index 63.
    MultiWordBitvector v(130);
    v.set(pattern_bit(130, 64));
    const auto s = v.shifted_left();
    CHECK(s.test(pattern_bit(130, 63)));
    CHECK(s.count_zeros() == 129);
    // Physical bit 63 (top of word 0 at w=64) must carry into bit 64.
    MultiWordBitvector c(130);
    c.set(kWordBits - 1);
    CHECK(c.shifted_left().test(kWordBits));
}

TEST_CASE("shift of all ones clears only the LSB") {
    const auto s = MultiWordBitvector::ones(130).shifted_left();
    CHECK_FALSE(s.test(0));
    CHECK(s.count_zeros() == 1);
    CHECK(canonical(s));
}

TEST_CASE("bitwise operations agree with a naive bit array") {
    std::mt19937_64 rng(testsupport::seed());
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % (4 * kWordBits);
        const auto a = random_bits(rng, n);
        const auto b = random_bits(rng, n);
        const auto va = from_bits(a);
        const auto vb = from_bits(b);

        Bits and_ref(n), or_ref(n), shl_ref(n);
        for (std::size_t i = 0; i < n; ++i) {
            and_ref[i] = a[i] && b[i];
            or_ref[i] = a[i] || b[i];
            shl_ref[i] = i == 0 ? false : a[i - 1];
        }
        const auto vand = va & vb;
        const auto vor = va | vb;
        const auto vshl = va.shifted_left();
        CHECK(to_bits(vand) == and_ref);
        CHECK(to_bits(vor) == or_ref);
        CHECK(to_bits(vshl) == shl_ref);
        CHECK(canonical(vand));
        CHECK(canonical(vor));
        CHECK(canonical(vshl));
        CHECK(MultiWordBitvector::from_string(va.to_string()) == va);
    }
}

TEST_CASE("ones vector is canonical and reports all ones") {
    for (std::size_t n : {1u, 31u, 32u, 63u, 64u, 65u, 200u}) {
        const auto v = MultiWordBitvector::ones(n);
        CHECK(v.all_ones());
        CHECK(canonical(v));
        CHECK(v.msb());
        CHECK(v.word_count() == words_for_bits(n));
    }
}
