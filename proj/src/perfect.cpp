#include "qpc/perfect.hpp"

#include <algorithm>

#include "qpc/error.hpp"
#include "qpc/kernels.hpp"

namespace qpc {

namespace {

constexpr uint64_t kExhaustiveLimit = 100'000'000;

uint64_t ipow(uint64_t b, unsigned e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

size_t word_weight(const Word& a) { return kernels::count_nonzero(a.data(), a.size()); }

}  // namespace

CyclotomicInt CyclotomicInt::from_counts(unsigned p, const std::vector<long long>& counts) {
    if (counts.size() != p) throw Error("ShapeMismatch", "need one count per power of zeta");
    CyclotomicInt z(p);
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    for (unsigned i = 0; i + 1 < p; ++i) z.coeffs_[i] = counts[i] - counts[p - 1];
    return z;
}

bool CyclotomicInt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long c) { return c == 0; });
}

bool CyclotomicInt::equals_integer(long long k) const {
    if (coeffs_[0] != k) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](long long c) { return c == 0; });
}

std::optional<unsigned> admissible_m(unsigned q, size_t n) {
    uint64_t num = uint64_t(q) * q;  // q^m, starting at m = 2
    for (unsigned m = 2; m < 64; ++m) {
        uint64_t len = (num - 1) / (q - 1);
        if (len == n) return m;
        if (len > n) return std::nullopt;
        num *= q;
    }
    return std::nullopt;
}

Code hamming_sphere(const Field& f, size_t n) {
    std::vector<Word> words;
    words.reserve(1 + n * (f.q() - 1));
    words.emplace_back(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (unsigned c = 1; c < f.q(); ++c) {
            Word w(n, 0);
            w[i] = uint8_t(c);
            words.push_back(std::move(w));
        }
    return Code(f, n, std::move(words));
}

PerfectReport is_perfect(const Code& c) {
    const Field& f = c.field();
    const unsigned q = f.q();
    const size_t n = c.length();
    PerfectReport rep;

    auto m = admissible_m(q, n);
    if (!m) {
        rep.method = "inadmissible";
        rep.reason = "length is not (q^m - 1)/(q - 1) for any m >= 2";
        return rep;
    }
    rep.m = *m;
    rep.cardinality_ok = uint64_t(c.size()) == ipow(q, unsigned(n - *m));

    uint64_t space = ipow(q, unsigned(n));
    if (space > kExhaustiveLimit) {
        rep.method = "packing-bound";
        rep.is_perfect = rep.cardinality_ok && c.size() >= 2 && min_distance_at_least(c, 3);
        if (!rep.is_perfect) rep.reason = "cardinality or distance criterion failed";
        return rep;
    }

    rep.method = "exhaustive";
    std::vector<uint8_t> cover(size_t(space), 0);
    std::vector<uint64_t> pow(n);
    for (size_t i = 0; i < n; ++i) pow[i] = ipow(q, unsigned(n - 1 - i));
    auto mark = [&](uint64_t idx) {
        if (cover[size_t(idx)] < 255) ++cover[size_t(idx)];
    };
    for (const Word& w : c.words()) {
        uint64_t idx = c.encode(w);
        mark(idx);
        for (size_t i = 0; i < n; ++i) {
            uint64_t base = idx - w[i] * pow[i];
            for (unsigned v = 0; v < q; ++v)
                if (v != w[i]) mark(base + v * pow[i]);
        }
    }
    uint64_t defects = 0;
    for (uint8_t x : cover) defects += (x != 1);
    rep.coverage_defects = defects;
    rep.is_perfect = defects == 0 && rep.cardinality_ok;
    if (!rep.is_perfect) rep.reason = "coverage defects or wrong cardinality";
    return rep;
}

CyclotomicInt char_sum(const Word& u, const Code& c) {
    const Field& f = c.field();
    if (!f.prime()) throw Error("NonPrimeField", "character sums need a prime field");
    const unsigned p = f.q();
    std::vector<long long> counts(p, 0);
    for (const Word& v : c.words()) ++counts[dot(f, u, v)];
    return CyclotomicInt::from_counts(p, counts);
}

long long sphere_char_value(const Word& u, unsigned q, unsigned m) {
    return (long long)ipow(q, m) - (long long)q * (long long)word_weight(u);
}

Theorem1Result theorem1_check(const Code& c) {
    const unsigned q = c.field().q();
    const size_t n = c.length();
    PerfectReport rep = is_perfect(c);
    if (!rep.is_perfect) throw Error("NotPerfect", "theorem 1 requires a 1-perfect code");

    Theorem1Result res;
    res.rank = code_rank(c);
    res.dual_weights = weight_distribution(orthogonal(c));

    uint64_t expected = ipow(q, unsigned(n - res.rank)) - 1;
    size_t peak = size_t(ipow(q, rep.m - 1));
    res.ok = true;
    for (size_t i = 0; i <= n; ++i) {
        uint64_t want = i == 0 ? 1 : (i == peak ? expected : 0);
        if (res.dual_weights.counts[i] != want) res.ok = false;
    }
    return res;
}

Decomposition decompose(const Code& c, const Word& w) {
    const Field& f = c.field();
    const unsigned q = f.q();
    if (q == 2) throw Error("BinaryFieldUnsupported", "decomposition requires q != 2");
    auto m = admissible_m(q, c.length());
    if (!m) throw Error("LengthNotAdmissible", "length is not an admissible 1-perfect length");
    size_t suffix_len = size_t(ipow(q, *m - 1));
    if (word_weight(w) != suffix_len)
        throw Error("WrongWeight", "dual word must have weight q^(m-1)");
    for (const Word& v : c.words())
        if (dot(f, w, v) != 0) throw Error("NotDualWord", "w is not orthogonal to the code");

    Decomposition d;
    d.w = w;
    d.suffix_len = suffix_len;
    d.prefix_len = c.length() - suffix_len;

    // scale support coordinates by w_i (making the image dual word all-ones)
    // and move the support to the tail, both order-preserving
    d.map.perm.resize(c.length());
    d.map.scales.assign(c.length(), 1);
    size_t front = 0, back = d.prefix_len;
    for (size_t i = 0; i < c.length(); ++i) {
        if (w[i] == 0) {
            d.map.perm[i] = front++;
        } else {
            d.map.perm[i] = back;
            d.map.scales[back] = w[i];
            ++back;
        }
    }

    std::map<Word, std::vector<Word>> inner, outer;
    for (const Word& cw : c.words()) {
        Word img = apply_monomial(f, cw, d.map);
        Word u(img.begin(), img.begin() + long(d.prefix_len));
        Word v(img.begin() + long(d.prefix_len), img.end());
        uint8_t s = 0;
        for (uint8_t x : v) s = f.add(s, x);
        // automatic once w is dual: the prefix carries no support of w
        if (s != 0) throw Error("NotDualWord", "suffix outside the trivial MDS code");
        inner[v].push_back(u);
        outer[u].push_back(std::move(v));
    }
    for (auto& [v, us] : inner) d.inner.emplace(v, Code(f, d.prefix_len, std::move(us)));
    for (auto& [u, vs] : outer) d.outer.emplace(u, Code(f, d.suffix_len, std::move(vs)));
    return d;
}

Theorem2Report check_theorem2(const Code& c) {
    const Field& f = c.field();
    const unsigned q = f.q();
    if (q == 2) throw Error("BinaryFieldUnsupported", "theorem 2 requires q != 2");
    auto m = admissible_m(q, c.length());
    if (!m) throw Error("LengthNotAdmissible", "length is not an admissible 1-perfect length");
    const size_t n = c.length();
    const size_t suffix_len = size_t(ipow(q, *m - 1));

    Theorem2Report rep;
    rep.perfect = is_perfect(c).is_perfect;
    rep.non_full_rank = code_rank(c) < n;

    // candidate dual word of weight q^(m-1); fall back to the canonical
    // 0...01...1 pattern when the dual has none
    Word w;
    for (const Word& dw : orthogonal(c).enumerate()) {
        if (kernels::count_nonzero(dw.data(), dw.size()) == suffix_len) {
            w = dw;
            break;
        }
    }
    if (w.empty()) {
        w.assign(n, 0);
        std::fill(w.begin() + long(n - suffix_len), w.end(), 1);
    } else {
        rep.dual_word = w;
    }

    // evaluate the C'/C'' conditions against w
    rep.conditions_hold = true;
    std::map<Word, std::vector<Word>> inner, outer;
    const size_t prefix_len = n - suffix_len;
    MonomialMap map;
    map.perm.resize(n);
    map.scales.assign(n, 1);
    size_t front = 0, back = prefix_len;
    for (size_t i = 0; i < n; ++i) {
        if (w[i] == 0) {
            map.perm[i] = front++;
        } else {
            map.perm[i] = back;
            map.scales[back] = w[i];
            ++back;
        }
    }
    for (const Word& cw : c.words()) {
        Word img = apply_monomial(f, cw, map);
        Word u(img.begin(), img.begin() + long(prefix_len));
        Word v(img.begin() + long(prefix_len), img.end());
        uint8_t s = 0;
        for (uint8_t x : v) s = f.add(s, x);
        if (s != 0) {
            rep.conditions_hold = false;
            rep.detail = "a suffix falls outside the trivial MDS code";
            return rep;
        }
        inner[v].push_back(u);
        outer[u].push_back(v);
    }

    uint64_t mds_size = ipow(q, unsigned(suffix_len - 1));
    uint64_t prefix_space = ipow(q, unsigned(prefix_len));
    uint64_t outer_size = ipow(q, unsigned(suffix_len - *m));
    if (inner.size() != mds_size || outer.size() != prefix_space) {
        rep.conditions_hold = false;
        rep.detail = "some C'(v) or C''(u) is empty";
        return rep;
    }
    for (auto& [v, words] : inner) {
        Code cp(f, prefix_len, std::move(words));
        // length 1 is the recursion bottom: any single word is 1-perfect
        bool cp_perfect =
            prefix_len == 1 ? cp.size() == 1 : is_perfect(cp).is_perfect;
        if (!cp_perfect) {
            rep.conditions_hold = false;
            rep.detail = "a C'(v) is not 1-perfect";
            return rep;
        }
    }
    for (auto& [u, words] : outer) {
        Code cpp(f, suffix_len, std::move(words));
        if (uint64_t(cpp.size()) != outer_size || min_distance(cpp) != 3) {
            rep.conditions_hold = false;
            rep.detail = "a C''(u) has wrong parameters";
            return rep;
        }
    }
    return rep;
}

}  // namespace qpc
