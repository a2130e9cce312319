#include <random>

#include "doctest.h"
#include "qpc/constructions.hpp"
#include "qpc/error.hpp"
#include "qpc/perfect.hpp"

using namespace qpc;

namespace {

Word random_word(std::mt19937& rng, unsigned q, size_t n) {
    std::uniform_int_distribution<unsigned> dist(0, q - 1);
    Word w(n);
    for (auto& x : w) x = uint8_t(dist(rng));
    return w;
}

// Hamming code with one nonzero codeword moved to a neighbor.
Code perturbed_hamming(unsigned q, unsigned m) {
    Code h = hamming_code(q, m).to_code();
    std::vector<Word> words = h.words();
    Word moved = words.back();
    words.pop_back();
    moved[0] = uint8_t((moved[0] + 1) % q);
    words.push_back(moved);
    return Code(h.field(), h.length(), std::move(words));
}

}  // namespace

TEST_CASE("cyclotomic integers reduce canonically") {
    // 1 + zeta + zeta^2 = 0 in Z[zeta_3]
    CyclotomicInt z = CyclotomicInt::from_counts(3, {1, 1, 1});
    CHECK(z.is_zero());
    CHECK(CyclotomicInt::from_counts(3, {5, 0, 0}).equals_integer(5));
    CHECK_FALSE(CyclotomicInt::from_counts(3, {2, 1, 0}).equals_integer(2));
    CHECK(CyclotomicInt::from_counts(5, {2, 1, 1, 1, 1}).equals_integer(1));
}

TEST_CASE("is_perfect") {
    SUBCASE("hamming(3,2) is perfect") {
        PerfectReport rep = is_perfect(hamming_code(3, 2).to_code());
        CHECK(rep.is_perfect);
        CHECK(rep.method == "exhaustive");
        CHECK(rep.coverage_defects == 0);
        CHECK(rep.m == 2);
    }
    SUBCASE("deleting a word breaks cardinality and coverage") {
        Code h = hamming_code(3, 2).to_code();
        std::vector<Word> words(h.words().begin(), h.words().end() - 1);
        PerfectReport rep = is_perfect(Code(h.field(), 4, std::move(words)));
        CHECK_FALSE(rep.is_perfect);
        CHECK_FALSE(rep.cardinality_ok);
        CHECK(rep.coverage_defects > 0);
    }
    SUBCASE("translates of hamming(3,3) stay perfect, exhaustively over 3^13") {
        std::mt19937 rng(41);
        Code h = hamming_code(3, 3).to_code();
        Code t = translate(h, random_word(rng, 3, 13));
        PerfectReport rep = is_perfect(t);
        CHECK(rep.is_perfect);
        CHECK(rep.method == "exhaustive");
    }
    SUBCASE("inadmissible lengths are reported, not thrown") {
        const Field& f3 = Field::get(3);
        PerfectReport rep = is_perfect(Code(f3, 5, {Word(5, 0)}));
        CHECK_FALSE(rep.is_perfect);
        CHECK(rep.method == "inadmissible");
    }
    SUBCASE("exhaustive verdict equals the packing-bound criterion") {
        auto packing = [](const Code& c) {
            auto m = admissible_m(c.field().q(), c.length());
            if (!m) return false;
            uint64_t want = 1;
            for (unsigned i = 0; i < c.length() - *m; ++i) want *= c.field().q();
            return uint64_t(c.size()) == want && c.size() >= 2 && min_distance_at_least(c, 3);
        };
        std::vector<Code> samples;
        samples.push_back(hamming_code(3, 2).to_code());
        samples.push_back(hamming_code(2, 3).to_code());
        samples.push_back(perturbed_hamming(3, 2));
        samples.push_back(perturbed_hamming(2, 3));
        std::mt19937 rng(9);
        samples.push_back(translate(hamming_code(3, 2).to_code(), random_word(rng, 3, 4)));
        for (const Code& c : samples) CHECK(is_perfect(c).is_perfect == packing(c));
    }
}

TEST_CASE("character sums") {
    const Field& f3 = Field::get(3);
    Code h4 = hamming_code(3, 2).to_code();
    SUBCASE("chi_0 counts the code") {
        CHECK(char_sum(Word(4, 0), h4).equals_integer(9));
    }
    SUBCASE("dual words give |C|") {
        Code h13 = hamming_code(3, 3).to_code();
        Word w{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1};
        CHECK(char_sum(w, h13).equals_integer(59049));
    }
    SUBCASE("weight-one vectors vanish on a perfect ternary code") {
        Code h13 = hamming_code(3, 3).to_code();
        Word u(13, 0);
        u[0] = 1;
        CHECK(char_sum(u, h13).is_zero());
    }
    SUBCASE("non-prime fields are rejected") {
        const Field& f4 = Field::get(4);
        Code c(f4, 2, {{0, 0}});
        CHECK_THROWS_AS(char_sum(Word{0, 0}, c), Error);
    }
    SUBCASE("chi_u of the full space vanishes for every nonzero u") {
        Code space = full_space(3, 4);
        for (const Word& u : space.words())
            if (u != Word(4, 0)) CHECK(char_sum(u, space).is_zero());
    }
    SUBCASE("vanishing for all weights outside {0, q^(m-1)}, exhaustive at (3,2)") {
        Code space = full_space(3, 4);
        for (const Word& u : space.words()) {
            size_t wt = 0;
            for (uint8_t x : u) wt += x != 0;
            if (wt != 0 && wt != 3) CHECK(char_sum(u, h4).is_zero());
        }
    }
    SUBCASE("sampled vanishing at (3,3)") {
        std::mt19937 rng(3);
        Code h13 = hamming_code(3, 3).to_code();
        int checked = 0;
        while (checked < 200) {
            Word u = random_word(rng, 3, 13);
            size_t wt = 0;
            for (uint8_t x : u) wt += x != 0;
            if (wt == 0 || wt == 9) continue;
            CHECK(char_sum(u, h13).is_zero());
            ++checked;
        }
    }
    (void)f3;
}

TEST_CASE("sphere character values") {
    CHECK(sphere_char_value(Word(13, 0), 3, 3) == 27);
    CHECK(sphere_char_value(Word(13, 1), 3, 3) == 27 - 3 * 13);
    {
        Word u(13, 0);
        for (int i = 4; i < 13; ++i) u[i] = 1;  // weight 9
        CHECK(sphere_char_value(u, 3, 3) == 0);
    }
    SUBCASE("cross-checked against the explicit radius-1 sphere at (3,2)") {
        const Field& f3 = Field::get(3);
        Code sphere = hamming_sphere(f3, 4);
        CHECK(sphere.size() == 9);
        Code space = full_space(3, 4);
        for (const Word& u : space.words())
            CHECK(char_sum(u, sphere).equals_integer(sphere_char_value(u, 3, 2)));
    }
}

TEST_CASE("theorem 1: dual weight distributions of perfect codes") {
    SUBCASE("hamming(3,3)") {
        Theorem1Result res = theorem1_check(hamming_code(3, 3).to_code());
        CHECK(res.ok);
        CHECK(res.rank == 10);
        CHECK(res.dual_weights.counts[0] == 1);
        CHECK(res.dual_weights.counts[9] == 26);
    }
    SUBCASE("all suite parameters") {
        for (auto [q, m] : {std::pair<unsigned, unsigned>{2, 3}, {2, 4}, {3, 2}, {5, 2}})
            CHECK(theorem1_check(hamming_code(q, m).to_code()).ok);
    }
    SUBCASE("imperfect codes are rejected") {
        CHECK_THROWS_AS(theorem1_check(perturbed_hamming(3, 2)), Error);
    }
}

TEST_CASE("decomposition along a dual word") {
    Code h13 = hamming_code(3, 3).to_code();
    Word w{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1};

    SUBCASE("inner code at the zero suffix is a 9-word perfect code of length 4") {
        Decomposition d = decompose(h13, w);
        const Code& inner = d.inner.at(Word(9, 0));
        CHECK(inner.size() == 9);
        CHECK(is_perfect(inner).is_perfect);
    }
    SUBCASE("outer code at the zero prefix is the [9,6,3] subcode") {
        Decomposition d = decompose(h13, w);
        const Code& outer = d.outer.at(Word(4, 0));
        CHECK(outer.size() == 729);
        CHECK(outer.words() == extract_cpp(3, 2).to_code().words());
    }
    SUBCASE("the split is partition-consistent") {
        Decomposition d = decompose(h13, w);
        uint64_t inner_total = 0, outer_total = 0;
        for (const auto& [v, c] : d.inner) inner_total += c.size();
        for (const auto& [u, c] : d.outer) outer_total += c.size();
        CHECK(inner_total == h13.size());
        CHECK(outer_total == h13.size());
    }
    SUBCASE("a scaled dual word gives the same split after canonicalization") {
        Word w2 = w;
        for (auto& x : w2) x = uint8_t((2 * x) % 3);
        Decomposition d1 = decompose(h13, w);
        Decomposition d2 = decompose(h13, w2);
        CHECK(d1.inner.size() == d2.inner.size());
        CHECK(d2.inner.count(Word(9, 0)) == 1);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(decompose(h13, Word(13, 1)), Error);              // weight 13
        Word not_dual(13, 0);
        not_dual[0] = 1;
        for (int i = 5; i < 13; ++i) not_dual[i] = 1;                      // weight 9, not dual
        CHECK_THROWS_AS(decompose(h13, not_dual), Error);
        Code b = hamming_code(2, 3).to_code();
        Word wb(7, 0);
        for (int i = 3; i < 7; ++i) wb[i] = 1;
        CHECK_THROWS_AS(decompose(b, wb), Error);                          // q = 2
    }
}

TEST_CASE("theorem 2 equivalence check") {
    SUBCASE("hamming(3,3) satisfies both sides") {
        Theorem2Report rep = check_theorem2(hamming_code(3, 3).to_code());
        CHECK(rep.ok());
        CHECK(rep.perfect);
        CHECK(rep.non_full_rank);
        CHECK(rep.conditions_hold);
        CHECK(rep.dual_word.has_value());
    }
    SUBCASE("a perturbed code fails, and both sides agree on the failure") {
        Theorem2Report rep = check_theorem2(perturbed_hamming(3, 3));
        CHECK_FALSE(rep.ok());
        CHECK_FALSE(rep.perfect);
        CHECK_FALSE(rep.conditions_hold);
    }
}
