#include "qpc/concat.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "qpc/error.hpp"
#include "qpc/perfect.hpp"

namespace qpc {

namespace {

uint64_t ipow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

size_t zero_part_index(const Partition& p) {
    Word zero(p.ambient.length(), 0);
    for (size_t i = 0; i < p.parts.size(); ++i)
        if (p.parts[i].contains(zero)) return i;
    throw Error("ZeroNotInCode", "no part contains the all-zero word");
}

// part-0 words of both partitions plus the coset representatives
// (lexicographically smallest part members, which is words()[0]).
struct CosetView {
    std::vector<Word> basis1, basis2;  // span bases of the zero parts
    std::vector<Word> reps1, reps2;
    size_t n1 = 0, n2 = 0;
};

CosetView coset_view(const Partition& p1, const Partition& p2) {
    if (zero_part_index(p1) != 0 || zero_part_index(p2) != 0)
        throw Error("ZeroNotInCode", "zero part must have index 0");
    CosetView cv;
    cv.n1 = p1.ambient.length();
    cv.n2 = p2.ambient.length();
    const Field& f = p1.ambient.field();
    {
        SpanBasis b(f, cv.n1);
        for (const Word& w : p1.parts[0].words()) b.insert(w);
        cv.basis1 = b.rows();
    }
    {
        SpanBasis b(f, cv.n2);
        for (const Word& w : p2.parts[0].words()) b.insert(w);
        cv.basis2 = b.rows();
    }
    for (const Code& part : p1.parts) cv.reps1.push_back(part.words()[0]);
    for (const Code& part : p2.parts) cv.reps2.push_back(part.words()[0]);
    // the rank shortcut is only sound for coset partitions of the zero part
    for (size_t i = 1; i < p1.parts.size(); ++i)
        if (translate(p1.parts[0], cv.reps1[i]).words() != p1.parts[i].words())
            throw Error("PartitionInvalid", "p1 is not a coset partition of its zero part");
    for (size_t i = 1; i < p2.parts.size(); ++i)
        if (translate(p2.parts[0], cv.reps2[i]).words() != p2.parts[i].words())
            throw Error("PartitionInvalid", "p2 is not a coset partition of its zero part");
    return cv;
}

Word concat_words(const Word& u, const Word& v) {
    Word w;
    w.reserve(u.size() + v.size());
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    return w;
}

size_t rank_from_view(const Field& f, const CosetView& cv, const Permutation& alpha) {
    SpanBasis basis(f, cv.n1 + cv.n2);
    Word zero1(cv.n1, 0), zero2(cv.n2, 0);
    for (const Word& h : cv.basis1) basis.insert(concat_words(h, zero2));
    for (const Word& g : cv.basis2) basis.insert(concat_words(zero1, g));
    for (size_t i = 0; i < alpha.size(); ++i)
        basis.insert(concat_words(cv.reps1[i], cv.reps2[alpha[i]]));
    return basis.dim();
}

std::vector<Permutation> zero_fixing_permutations(size_t k) {
    Permutation tail(k - 1);
    for (size_t i = 0; i < k - 1; ++i) tail[i] = i + 1;
    std::vector<Permutation> out;
    do {
        Permutation alpha(k);
        alpha[0] = 0;
        std::copy(tail.begin(), tail.end(), alpha.begin() + 1);
        out.push_back(std::move(alpha));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;
}

}  // namespace

void validate_concat_input(const Partition& p1, const Partition& p2, const Permutation& alpha) {
    const Field& f = p1.ambient.field();
    const unsigned q = f.q();
    if (p2.ambient.field().q() != q)
        throw Error("PartitionInvalid", "partitions are over different fields");

    const size_t n1 = p1.ambient.length();
    const size_t k = (q - 1) * n1 + 1;
    if (p1.parts.size() != k || p2.parts.size() != k)
        throw Error("SizeMismatch", "both partitions need (q-1)n + 1 parts");
    if (p2.ambient.length() != k)
        throw Error("SizeMismatch", "second partition must have length (q-1)n + 1");
    if (alpha.size() != k) throw Error("SizeMismatch", "alpha must act on the part index set");
    {
        std::vector<bool> seen(k, false);
        for (size_t img : alpha) {
            if (img >= k || seen[img]) throw Error("SizeMismatch", "alpha is not a permutation");
            seen[img] = true;
        }
    }

    auto m = admissible_m(q, n1);
    if (!m) throw Error("PartitionInvalid", "p1 length is not an admissible 1-perfect length");
    if (uint64_t(p1.ambient.size()) != ipow(q, unsigned(n1)))
        throw Error("PartitionInvalid", "p1 ambient is not the full space");
    if (uint64_t(p2.ambient.size()) != ipow(q, unsigned(k - 1)))
        throw Error("PartitionInvalid", "p2 ambient is not the trivial MDS code");
    for (const Word& w : p2.ambient.words()) {
        uint8_t s = 0;
        for (uint8_t x : w) s = f.add(s, x);
        if (s != 0) throw Error("PartitionInvalid", "p2 ambient word does not sum to zero");
    }

    auto check_cover = [](const Partition& p, const char* name) {
        std::unordered_set<uint64_t> seen;
        seen.reserve(p.ambient.size() * 2);
        uint64_t total = 0;
        for (const Code& part : p.parts) {
            total += part.size();
            for (const Word& w : part.words()) {
                if (!p.ambient.contains(w))
                    throw Error("PartitionInvalid",
                                std::string(name) + " part word outside the ambient set");
                if (!seen.insert(p.ambient.encode(w)).second)
                    throw Error("PartitionInvalid", std::string(name) + " parts overlap");
            }
        }
        if (total != p.ambient.size())
            throw Error("PartitionInvalid", std::string(name) + " parts do not cover the ambient");
    };
    check_cover(p1, "p1");
    check_cover(p2, "p2");

    for (const Code& part : p1.parts)
        if (!is_perfect(part).is_perfect)
            throw Error("PartitionInvalid", "a p1 part is not 1-perfect");
    const uint64_t part2_size = ipow(q, unsigned((q - 1) * n1 - *m));
    for (const Code& part : p2.parts) {
        if (uint64_t(part.size()) != part2_size)
            throw Error("PartitionInvalid", "a p2 part has the wrong cardinality");
        if (!min_distance_at_least(part, 3))
            throw Error("PartitionInvalid", "a p2 part has minimum distance below 3");
    }
}

Code concatenate(const Partition& p1, const Partition& p2, const Permutation& alpha) {
    validate_concat_input(p1, p2, alpha);
    const Field& f = p1.ambient.field();
    std::vector<Word> words;
    words.reserve(size_t(p1.ambient.size()) * p2.parts[0].size());
    for (size_t i = 0; i < p1.parts.size(); ++i)
        for (const Word& u : p1.parts[i].words())
            for (const Word& v : p2.parts[alpha[i]].words()) words.push_back(concat_words(u, v));
    return Code(f, p1.ambient.length() + p2.ambient.length(), std::move(words));
}

size_t rank_of_alpha(const Partition& p1, const Partition& p2, const Permutation& alpha) {
    CosetView cv = coset_view(p1, p2);
    if (alpha.empty() || alpha[0] != 0)
        throw Error("ZeroNotInCode", "alpha must align the zero parts");
    return rank_from_view(p1.ambient.field(), cv, alpha);
}

RankSurvey sweep_ranks(const Partition& p1, const Partition& p2, unsigned threads) {
    const Field& f = p1.ambient.field();
    CosetView cv = coset_view(p1, p2);
    std::vector<Permutation> perms = zero_fixing_permutations(p1.parts.size());
    std::vector<uint8_t> ranks(perms.size(), 0);

    if (threads < 1) threads = 1;
    threads = std::min<unsigned>(threads, std::thread::hardware_concurrency() > 0
                                              ? std::thread::hardware_concurrency()
                                              : 1);
    auto worker = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i)
            ranks[i] = uint8_t(rank_from_view(f, cv, perms[i]));
    };
    if (threads <= 1 || perms.size() < 1024) {
        worker(0, perms.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (perms.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            size_t lo = t * chunk, hi = std::min(perms.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    RankSurvey survey;
    survey.total = perms.size();
    for (size_t i = 0; i < perms.size(); ++i) {
        size_t r = ranks[i];
        ++survey.counts[r];
        if (!survey.witnesses.count(r)) survey.witnesses[r] = perms[i];
    }
    return survey;
}

Rank12Witness search_rank12(const Partition& p1, const Partition& p2) {
    const Field& f = p1.ambient.field();
    CosetView cv = coset_view(p1, p2);
    const size_t target = cv.n1 + cv.n2 - 1;  // one below full rank
    Permutation tail(p1.parts.size() - 1);
    for (size_t i = 0; i < tail.size(); ++i) tail[i] = i + 1;
    do {
        Permutation alpha(p1.parts.size());
        alpha[0] = 0;
        std::copy(tail.begin(), tail.end(), alpha.begin() + 1);
        if (rank_from_view(f, cv, alpha) == target)
            return Rank12Witness{alpha, concatenate(p1, p2, alpha)};
    } while (std::next_permutation(tail.begin(), tail.end()));
    throw Error("NotFound", "no permutation reaches rank one below full");
}

Matrix witness_vectors() {
    static const char* rows[12] = {
        "0001120000000",
        "0002102000000",
        "0010100200000",
        "0020100020000",
        "0100100002000",
        "0200100000200",
        "1000100000020",
        "2000100000002",
        "0000000111000",
        "0000001010100",
        "0000010010010",
        "0000000012021",
    };
    const Field& f = Field::get(3);
    Matrix m(f, 13);
    for (const char* r : rows) {
        Word w;
        for (const char* c = r; *c; ++c) w.push_back(uint8_t(*c - '0'));
        m.rows.push_back(std::move(w));
    }
    return m;
}

std::string format_permutation(const Permutation& alpha) {
    std::ostringstream os;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (i) os << ',';
        os << alpha[i];
    }
    return os.str();
}

Permutation parse_permutation(const std::string& text) {
    Permutation alpha;
    std::istringstream is(text);
    std::string cell;
    while (std::getline(is, cell, ',')) alpha.push_back(std::stoul(cell));
    return alpha;
}

}  // namespace qpc
