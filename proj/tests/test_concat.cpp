#include <random>
#include <unordered_map>

#include "doctest.h"
#include "qpc/concat.hpp"
#include "qpc/constructions.hpp"
#include "qpc/error.hpp"
#include "qpc/perfect.hpp"

using namespace qpc;

namespace {

const Partition& p1() {
    static Partition p = space_partition(3, 2);
    return p;
}

const Partition& p2() {
    static Partition p = mds_partition(3, 2);
    return p;
}

Permutation identity_alpha() {
    Permutation a(9);
    for (size_t i = 0; i < 9; ++i) a[i] = i;
    return a;
}

Permutation random_zero_fixing_alpha(std::mt19937& rng) {
    Permutation a = identity_alpha();
    std::shuffle(a.begin() + 1, a.end(), rng);
    return a;
}

}  // namespace

TEST_CASE("concatenate with the identity permutation") {
    Code c = concatenate(p1(), p2(), identity_alpha());
    CHECK(c.length() == 13);
    CHECK(c.size() == 59049);
    CHECK(c.contains(Word(13, 0)));
    CHECK(is_perfect(c).is_perfect);
}

TEST_CASE("membership product structure") {
    // (u|v) is a codeword iff the part index of u maps under alpha to the
    // part index of v; checked over all 59049 codewords
    std::mt19937 rng(29);
    Permutation alpha = random_zero_fixing_alpha(rng);
    Code c = concatenate(p1(), p2(), alpha);

    std::unordered_map<uint64_t, size_t> index1, index2;
    for (size_t i = 0; i < 9; ++i) {
        for (const Word& u : p1().parts[i].words()) index1[p1().ambient.encode(u)] = i;
        for (const Word& v : p2().parts[i].words()) index2[p2().ambient.encode(v)] = i;
    }
    for (const Word& w : c.words()) {
        Word u(w.begin(), w.begin() + 4), v(w.begin() + 4, w.end());
        CHECK(alpha[index1.at(p1().ambient.encode(u))] == index2.at(p2().ambient.encode(v)));
    }
}

TEST_CASE("validation rejects corrupted inputs") {
    SUBCASE("alpha of the wrong size") {
        CHECK_THROWS_AS(concatenate(p1(), p2(), Permutation{0, 1, 2}), Error);
    }
    SUBCASE("alpha that is not a permutation") {
        Permutation a = identity_alpha();
        a[3] = 4;
        a[4] = 4;
        CHECK_THROWS_AS(concatenate(p1(), p2(), a), Error);
    }
    SUBCASE("a moved word in a p2 part") {
        Partition bad = p2();
        std::vector<Word> words = bad.parts[3].words();
        words.back()[0] = uint8_t((words.back()[0] + 1) % 3);
        bad.parts[3] = Code(bad.ambient.field(), 9, std::move(words));
        try {
            concatenate(p1(), bad, identity_alpha());
            FAIL("expected PartitionInvalid");
        } catch (const Error& e) {
            CHECK(e.code() == "PartitionInvalid");
        }
    }
}

TEST_CASE("dual word and rank bound") {
    std::mt19937 rng(31);
    Permutation alpha = random_zero_fixing_alpha(rng);
    Code c = concatenate(p1(), p2(), alpha);
    const Field& f = c.field();
    Word w(13, 0);
    for (int i = 4; i < 13; ++i) w[i] = 1;
    for (const Word& cw : c.words()) CHECK(dot(f, w, cw) == 0);
    CHECK(code_rank(c) <= 12);
}

TEST_CASE("minimum distance 3 via the three proof cases") {
    // same P1 part, same suffix / same prefix, same P2 part / both differ
    const Code& a0 = p1().parts[2];
    const Code& b0 = p2().parts[5];
    CHECK(min_distance(a0) == 3);
    CHECK(min_distance(b0) == 3);
    // suffixes in the MDS code are pairwise at distance >= 2
    CHECK(min_distance_at_least(p2().ambient, 2));
    // and a pair at distance exactly 3 exists
    Word u1 = a0.words()[0], u2 = a0.words()[1];
    size_t d = 0;
    for (size_t i = 0; i < 4; ++i) d += u1[i] != u2[i];
    CHECK(d == 3);
}

TEST_CASE("rank shortcut") {
    SUBCASE("identity labeling gives the Hamming rank") {
        CHECK(rank_of_alpha(p1(), p2(), identity_alpha()) == 10);
    }
    SUBCASE("agrees with the assembled code on random permutations") {
        std::mt19937 rng(37);
        for (int trial = 0; trial < 3; ++trial) {
            Permutation alpha = random_zero_fixing_alpha(rng);
            CHECK(rank_of_alpha(p1(), p2(), alpha) == code_rank(concatenate(p1(), p2(), alpha)));
        }
    }
    SUBCASE("requires the zero parts to be aligned") {
        Permutation a = identity_alpha();
        std::swap(a[0], a[1]);
        CHECK_THROWS_AS(rank_of_alpha(p1(), p2(), a), Error);
    }
}

TEST_CASE("rank-12 witness search") {
    Rank12Witness w = search_rank12(p1(), p2());
    CHECK(w.alpha[0] == 0);
    CHECK(code_rank(w.code) == 12);
    CHECK(is_perfect(w.code).is_perfect);
    CHECK(rank_of_alpha(p1(), p2(), w.alpha) == 12);
}

TEST_CASE("the printed witness vectors") {
    Matrix m = witness_vectors();
    REQUIRE(m.rows.size() == 12);
    CHECK(m.cols == 13);
    CHECK(span_dim(*m.field, m.rows) == 12);
    Word w(13, 0);
    for (int i = 4; i < 13; ++i) w[i] = 1;
    for (const Word& v : m.rows) CHECK(dot(*m.field, w, v) == 0);
    // first vector reads 0001120000000
    CHECK(m.rows[0] == Word{0, 0, 0, 1, 1, 2, 0, 0, 0, 0, 0, 0, 0});
    size_t wt = 0;
    for (uint8_t x : m.rows[0]) wt += x != 0;
    CHECK(wt == 3);
}

TEST_CASE("permutation serialization") {
    Permutation a{0, 3, 1, 2};
    CHECK(format_permutation(a) == "0,3,1,2");
    CHECK(parse_permutation("0,3,1,2") == a);
}
