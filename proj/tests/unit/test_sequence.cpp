#include <doctest.h>

#include <random>

#include "bitgraph/errors.hpp"
#include "bitgraph/pattern.hpp"
#include "bitgraph/sequence.hpp"
#include "random.hpp"

using namespace bitgraph;

TEST_CASE("ACGT packs to codes 0..3") {
    const auto s = EncodedSequence::encode("ACGT");
    REQUIRE(s.size() == 4);
    CHECK(s.code(0) == 0);
    CHECK(s.code(1) == 1);
    CHECK(s.code(2) == 2);
    CHECK(s.code(3) == 3);
    CHECK(s.packed_words()[0] == 0b11100100u);
}

TEST_CASE("empty input gives an empty sequence") {
    const auto s = EncodedSequence::encode("");
    CHECK(s.size() == 0);
    CHECK(s.empty());
    CHECK(s.decode().empty());
}

TEST_CASE("lowercase is accepted") { CHECK(EncodedSequence::encode("acgt").decode() == "ACGT"); }

TEST_CASE("lenient mode flags ambiguous characters") {
    const auto s = EncodedSequence::encode("ACGN");
    CHECK(s.size() == 4);
    CHECK(s.is_ambiguous(3));
    CHECK_FALSE(s.is_ambiguous(2));
    CHECK(s.code(3) == kAmbiguousCode);
    CHECK(EncodedSequence::encode(s.decode().substr(0, 3)) == s.subsequence(0, 3));
}

TEST_CASE("strict mode rejects non-ACGT characters") {
    CHECK_THROWS_AS(EncodedSequence::encode("ACGN", EncodeMode::Strict), Error);
    try {
        (void)EncodedSequence::encode("AC-T", EncodeMode::Strict);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidCharacter);
    }
}

TEST_CASE("decode then encode is the identity on random sequences") {
    std::mt19937_64 rng(testsupport::seed());
    for (std::size_t n : {1u, 31u, 32u, 33u, 64u, 65u, 1000u}) {
        const auto raw = testsupport::random_dna(rng, n);
        const auto s = EncodedSequence::encode(raw);
        CHECK(s.decode() == raw);
        CHECK(EncodedSequence::encode(s.decode()) == s);
        CHECK(EncodedSequence::from_codes(s.codes()) == s);
    }
}

TEST_CASE("bitmasks for ACGT") {
    const auto m = generate_pattern_bitmasks(EncodedSequence::encode("ACGT"));
    CHECK(m.mask(0).to_string() == "0111");
    CHECK(m.mask(1).to_string() == "1011");
    CHECK(m.mask(2).to_string() == "1101");
    CHECK(m.mask(3).to_string() == "1110");
    CHECK(m.mask(kAmbiguousCode).to_string() == "1111");
}

TEST_CASE("bitmasks for a uniform pattern") {
    const auto m = generate_pattern_bitmasks(EncodedSequence::encode("AAAA"));
    CHECK(m.mask(0).to_string() == "0000");
    CHECK(m.mask(1).to_string() == "1111");
    CHECK(m.mask(2).to_string() == "1111");
    CHECK(m.mask(3).to_string() == "1111");
}

TEST_CASE("each position of a random pattern has exactly one zero and reconstructs the pattern") {
    std::mt19937_64 rng(testsupport::seed() + 1);
    for (std::size_t n : {1u, 63u, 64u, 65u, 100u, 300u}) {
        const auto raw = testsupport::random_dna(rng, n);
        const auto m = generate_pattern_bitmasks(EncodedSequence::encode(raw));
        std::string rebuilt;
        for (std::size_t i = 0; i < n; ++i) {
            int zeros = 0;
            char which = '?';
            for (std::uint8_t c = 0; c < 4; ++c) {
                if (!m.mask(c).test(pattern_bit(n, i))) {
                    ++zeros;
                    which = "ACGT"[c];
                }
            }
            CHECK(zeros == 1);
            rebuilt += which;
        }
        CHECK(rebuilt == raw);
    }
}

TEST_CASE("empty pattern is rejected") {
    CHECK_THROWS_AS(generate_pattern_bitmasks(EncodedSequence::encode("")), Error);
}

TEST_CASE("generic alphabet masks") {
    const Alphabet protein("ACDEFGHIKLMNPQRSTVWY");
    const auto codes = protein.encode("MKV");
    const auto m = generate_pattern_bitmasks(codes, protein.size());
    CHECK(m.mask(protein.code('M')).to_string() == "011");
    CHECK(m.mask(protein.code('K')).to_string() == "101");
    CHECK(m.mask(protein.code('V')).to_string() == "110");
    CHECK(m.mask(protein.code('W')).to_string() == "111");
    CHECK(protein.code('*') == protein.size());
}
