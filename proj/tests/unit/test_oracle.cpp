#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "random.hpp"

TEST_CASE("global distance of identical strings is zero with an all-match script") {
    const auto r = oracle::align("ACGT", "ACGT", oracle::Mode::Global);
    CHECK(r.distance == 0);
    CHECK(r.cigar == "4M");
}

TEST_CASE("global distance of ACGT and AGCT is two") {
    CHECK(oracle::distance("ACGT", "AGCT", oracle::Mode::Global) == 2);
    CHECK(oracle::recursive_distance("ACGT", "AGCT", oracle::Mode::Global) == 2);
}

TEST_CASE("empty text against AAA needs three insertions") {
    const auto r = oracle::align("", "AAA", oracle::Mode::Global);
    CHECK(r.distance == 3);
    CHECK(r.cigar == "3I");
}

TEST_CASE("table and recursion agree on random small inputs") {
    std::mt19937_64 rng(testsupport::seed());
    std::uniform_int_distribution<std::size_t> len(0, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const auto t = testsupport::random_dna(rng, len(rng));
        const auto p = testsupport::random_dna(rng, len(rng) + 1);
        for (auto mode : {oracle::Mode::Global, oracle::Mode::SemiGlobal}) {
            const int table = oracle::distance(t, p, mode);
            CHECK(table == oracle::recursive_distance(t, p, mode));
            const auto r = oracle::align(t, p, mode);
            CHECK(r.distance == table);
            std::size_t span = 0;
            CHECK(oracle::cigar_edits_if_valid(r.cigar, t, r.start, p, &span) == table);
            if (mode == oracle::Mode::Global) CHECK(span == t.size());
        }
    }
}

TEST_CASE("global distance is symmetric") {
    std::mt19937_64 rng(testsupport::seed() + 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = testsupport::random_dna(rng, 1 + trial % 30);
        const auto b = testsupport::mutate_n(rng, a, trial % 5);
        CHECK(oracle::distance(a, b, oracle::Mode::Global) == oracle::distance(b, a, oracle::Mode::Global));
    }
}

namespace {

oracle::CharDag random_dag(std::mt19937_64& rng, std::size_t n) {
    oracle::CharDag dag;
    dag.bases = testsupport::random_dna(rng, n);
    dag.succ.resize(n);
    std::uniform_int_distribution<int> fan(0, 2);
    for (std::size_t u = 0; u + 1 < n; ++u) {
        dag.succ[u].push_back(u + 1);
        const int extra = fan(rng);
        for (int e = 0; e < extra; ++e) {
            std::uniform_int_distribution<std::size_t> to(u + 1, n - 1);
            const auto v = to(rng);
            if (std::find(dag.succ[u].begin(), dag.succ[u].end(), v) == dag.succ[u].end()) dag.succ[u].push_back(v);
        }
    }
    return dag;
}

} // namespace

TEST_CASE("single-path DAG equals the semi-global distance") {
    std::mt19937_64 rng(testsupport::seed() + 2);
    for (int trial = 0; trial < 100; ++trial) {
        oracle::CharDag dag;
        dag.bases = testsupport::random_dna(rng, 1 + trial % 40);
        dag.succ.resize(dag.bases.size());
        for (std::size_t u = 0; u + 1 < dag.bases.size(); ++u) dag.succ[u] = {u + 1};
        const auto p = testsupport::random_dna(rng, 1 + trial % 13);
        const auto r = oracle::dag_align(dag, p);
        const auto lin = oracle::align(dag.bases, p, oracle::Mode::SemiGlobal);
        CHECK(r.distance == lin.distance);
        CHECK(r.start == lin.start);
    }
}

TEST_CASE("ten-character diamond: pattern equal to one branch costs nothing") {
    // AC -> {GGG, TTT} -> CA, linearised as A C G G G T T T C A.
    oracle::CharDag dag;
    dag.bases = "ACGGGTTTCA";
    dag.succ = {{1}, {2, 5}, {3}, {4}, {8}, {6}, {7}, {8}, {9}, {}};
    CHECK(oracle::dag_align(dag, "ACTTTCA").distance == 0);
    CHECK(oracle::dag_align(dag, "ACGGGCA").distance == 0);
    CHECK(oracle::dag_align_by_paths(dag, "ACTTTCA").distance == 0);
}

TEST_CASE("DAG table equals path enumeration on tiny random DAGs") {
    std::mt19937_64 rng(testsupport::seed() + 3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto dag = random_dag(rng, 1 + trial % 12);
        const auto p = testsupport::random_dna(rng, 1 + trial % 7);
        const auto a = oracle::dag_align(dag, p);
        const auto b = oracle::dag_align_by_paths(dag, p);
        CHECK(a.distance == b.distance);
        CHECK(a.start == b.start);
    }
}
