#include <doctest.h>

#include <random>

#include "bitgraph/genasm_dc.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace bitgraph;

namespace {

DcResult scan(const std::string& text, const std::string& pattern, int k, bool capture = false,
              StoredVectors stored = StoredVectors::MatchDel) {
    return dc_scan(EncodedSequence::encode(text), generate_pattern_bitmasks(EncodedSequence::encode(pattern)),
                   {k, capture, stored});
}

} // namespace

TEST_CASE("exact match at k=0") {
    const auto r = scan("ACGT", "ACGT", 0);
    REQUIRE(r.distance);
    CHECK(*r.distance == 0);
    CHECK(*r.start == 0);
}

TEST_CASE("AGCT against ACGT") {
    const auto r = scan("AGCT", "ACGT", 2);
    REQUIRE(r.distance);
    CHECK(*r.distance == oracle::distance("AGCT", "ACGT", oracle::Mode::SemiGlobal));
    CHECK(*r.distance == 2);
}

TEST_CASE("no match within k leaves both fields empty") {
    const auto r = scan("AAAAAAAA", "CCCC", 2);
    CHECK_FALSE(r.distance);
    CHECK_FALSE(r.start);
}

TEST_CASE("pattern suffix may hang past the end of the text") {
    // "AC" against "A": one insertion at the text end.
    const auto r = scan("A", "AC", 1);
    REQUIRE(r.distance);
    CHECK(*r.distance == 1);
    CHECK(*r.start == 0);
}

TEST_CASE("planted 100bp pattern with five edits") {
    std::mt19937_64 rng(testsupport::seed());
    for (int trial = 0; trial < 20; ++trial) {
        const auto text = testsupport::random_dna(rng, 200);
        const auto pattern = testsupport::mutate_n(rng, text.substr(50, 100), 5);
        const auto r = scan(text, pattern, 10);
        const auto o = oracle::align(text, pattern, oracle::Mode::SemiGlobal);
        REQUIRE(r.distance);
        CHECK(*r.distance == o.distance);
        CHECK(*r.start == o.start);
    }
}

TEST_CASE("distance and start agree with the semi-global oracle on random instances") {
    std::mt19937_64 rng(testsupport::seed() + 1);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + rng() % 200;
        const std::size_t m = 1 + rng() % 150;
        const int k = static_cast<int>(rng() % 20);
        std::string text = testsupport::random_dna(rng, n);
        std::string pattern;
        if (trial % 2 == 0 && m < n) {
            const std::size_t at = rng() % (n - m + 1);
            pattern = testsupport::mutate_n(rng, text.substr(at, m), rng() % 6);
            if (pattern.empty()) pattern = "A";
        } else {
            pattern = testsupport::random_dna(rng, m);
        }
        const auto r = scan(text, pattern, k);
        const auto o = oracle::align(text, pattern, oracle::Mode::SemiGlobal);
        if (o.distance <= k) {
            REQUIRE(r.distance);
            CHECK(*r.distance == o.distance);
            CHECK(*r.start == o.start);
        } else {
            CHECK_FALSE(r.distance);
        }
    }
}

TEST_CASE("ambiguous text characters never match") {
    const auto r = scan("ACNT", "ACGT", 2);
    REQUIRE(r.distance);
    CHECK(*r.distance == oracle::distance("ACNT", "ACGT", oracle::Mode::SemiGlobal));
    CHECK(*r.distance == 1);
}

TEST_CASE("generic alphabet scan") {
    const Alphabet letters("abcdefghijklmnopqrstuvwxyz ", true);
    const std::string text = "the quick brown fox jumps over the lazy dog";
    const std::string pattern = "brwn fax";
    const auto masks = generate_pattern_bitmasks(letters.encode(pattern), letters.size());
    const auto r = dc_scan(letters.encode(text), masks, {3, false});
    REQUIRE(r.distance);
    CHECK(*r.distance == oracle::distance(text, pattern, oracle::Mode::SemiGlobal));
    CHECK(*r.start == oracle::align(text, pattern, oracle::Mode::SemiGlobal).start);
}

TEST_CASE("status vectors are monotone in d") {
    std::mt19937_64 rng(testsupport::seed() + 2);
    for (int trial = 0; trial < 30; ++trial) {
        const auto text = testsupport::random_dna(rng, 80);
        const auto pattern = testsupport::mutate_n(rng, text.substr(10, 70), 4);
        const auto r = scan(text, pattern, 8, true, StoredVectors::StatusOnly);
        const auto& tr = *r.trace;
        for (std::size_t i = 0; i < tr.text_length(); ++i) {
            for (int d = 0; d < tr.max_errors(); ++d) {
                for (std::size_t pos = 0; pos < tr.pattern_length(); ++pos) {
                    if (!tr.bit(TraceVector::Status, i, d, pos)) CHECK_FALSE(tr.bit(TraceVector::Status, i, d + 1, pos));
                }
            }
        }
    }
}

TEST_CASE("reduced capture sets regenerate the same vectors") {
    std::mt19937_64 rng(testsupport::seed() + 3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto text = testsupport::random_dna(rng, 90);
        const auto pattern = testsupport::mutate_n(rng, text.substr(5, 70), 5);
        const auto all = scan(text, pattern, 10, true, StoredVectors::All);
        const auto mid = scan(text, pattern, 10, true, StoredVectors::MatchInsDel);
        const auto md = scan(text, pattern, 10, true, StoredVectors::MatchDel);
        const auto r = scan(text, pattern, 10, true, StoredVectors::StatusOnly);
        const auto& a = *all.trace;
        for (std::size_t i = 0; i <= a.text_length(); ++i) {
            for (int d = 0; d <= a.max_errors(); ++d) {
                for (std::size_t pos = 0; pos < a.pattern_length(); ++pos) {
                    for (auto v : {TraceVector::Match, TraceVector::Subst, TraceVector::Del, TraceVector::Ins,
                                   TraceVector::Status}) {
                        const bool ref = a.bit(v, i, d, pos);
                        CHECK(mid.trace->bit(v, i, d, pos) == ref);
                        CHECK(r.trace->bit(v, i, d, pos) == ref);
                        CHECK(md.trace->bit(v, i, d, pos) == ref);
                    }
                }
            }
        }
    }
}

TEST_CASE("capture footprint equals n*(k+1)*S*m bits") {
    const std::string w64 = std::string(64, 'A');
    for (auto [stored, s] : {std::pair{StoredVectors::All, 4u}, std::pair{StoredVectors::MatchInsDel, 3u},
                             std::pair{StoredVectors::MatchDel, 2u}, std::pair{StoredVectors::StatusOnly, 1u}}) {
        const auto r = scan(w64, w64, 63, true, stored);
        CHECK(r.trace->stored_bytes() == 64u * s * 64u * 64u / 8u);
    }
}

TEST_CASE("windowed scan equals a single scan for any worker count") {
    std::mt19937_64 rng(testsupport::seed() + 4);
    const auto text = EncodedSequence::encode(testsupport::random_dna(rng, 10000));
    const auto raw = text.decode();
    const auto pattern = EncodedSequence::encode(testsupport::mutate_n(rng, raw.substr(6000, 1000), 30));
    const auto single = dc_scan(text, generate_pattern_bitmasks(pattern), {50, false});
    REQUIRE(single.distance);
    for (unsigned workers : {1u, 2u, 4u, 8u}) CHECK(dc_windows(text, pattern, 50, workers) == single);
}

TEST_CASE("pattern planted across a sub-text boundary is found") {
    std::mt19937_64 rng(testsupport::seed() + 5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto raw = testsupport::random_dna(rng, 1200);
        // With 4 parts the stride is 300; plant straddling position 300.
        const std::size_t at = 300 - 20 + rng() % 40;
        const auto pat = testsupport::mutate_n(rng, raw.substr(at, 60), 2);
        const auto text = EncodedSequence::encode(raw);
        const auto pattern = EncodedSequence::encode(pat);
        const auto single = dc_scan(text, generate_pattern_bitmasks(pattern), {4, false});
        const auto o = oracle::align(raw, pat, oracle::Mode::SemiGlobal);
        REQUIRE(single.distance);
        CHECK(*single.distance == o.distance);
        for (unsigned workers : {1u, 2u, 4u, 8u}) CHECK(dc_windows(text, pattern, 4, workers) == single);
    }
}

TEST_CASE("filter accepts identical pairs") {
    std::mt19937_64 rng(testsupport::seed() + 6);
    const auto s = EncodedSequence::encode(testsupport::random_dna(rng, 100));
    const auto d = filter_pair(s, s, 5);
    CHECK(d.accept);
    CHECK(d.distance == 0);
}

TEST_CASE("filter rejects a pair six edits apart and reports the distance") {
    std::mt19937_64 rng(testsupport::seed() + 7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto ref = testsupport::random_dna(rng, 100);
        const auto read = testsupport::mutate_n(rng, ref, 8);
        const int o = oracle::distance(ref, read, oracle::Mode::SemiGlobal);
        if (o != 6) continue;
        const auto d = filter_pair(EncodedSequence::encode(ref), EncodedSequence::encode(read), 5);
        CHECK_FALSE(d.accept);
        CHECK(d.distance == 6);
    }
}

TEST_CASE("deleting the first read character is invisible to the filter") {
    std::mt19937_64 rng(testsupport::seed() + 8);
    const auto ref = testsupport::random_dna(rng, 100);
    const auto read = ref.substr(1);
    const int global = oracle::distance(ref, read, oracle::Mode::Global);
    CHECK(global == 1);
    const auto d = filter_pair(EncodedSequence::encode(ref), EncodedSequence::encode(read), global - 1);
    CHECK(d.accept);
    CHECK(d.distance == 0);
}
