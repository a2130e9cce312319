#include "qpc/codes.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "qpc/error.hpp"
#include "qpc/kernels.hpp"

namespace qpc {

namespace {

void word_add_inplace(const Field& f, Word& dst, const Word& src) {
    if (f.prime())
        kernels::add_mod(dst.data(), dst.data(), src.data(), dst.size(), uint8_t(f.q()));
    else
        for (size_t i = 0; i < dst.size(); ++i) dst[i] = f.add(dst[i], src[i]);
}

size_t word_distance(const Word& a, const Word& b) {
    return kernels::count_diff(a.data(), b.data(), a.size());
}

size_t word_weight(const Word& a) { return kernels::count_nonzero(a.data(), a.size()); }

}  // namespace

Code::Code(const Field& f, size_t n, std::vector<Word> words, bool known_linear)
    : field_(&f), n_(n), words_(std::move(words)), known_linear_(known_linear) {
    for (const Word& w : words_) {
        if (w.size() != n_) throw Error("ShapeMismatch", "word length mismatch");
        for (uint8_t x : w)
            if (x >= field_->q()) throw Error("BadElement", "entry out of field range");
    }
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
        throw Error("DuplicateWord", "code words must be distinct");
}

bool Code::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

uint64_t Code::encode(const Word& w) const {
    uint64_t idx = 0;
    for (uint8_t x : w) {
        if (idx > (UINT64_MAX - x) / field_->q()) throw Error("TooLarge", "q^n exceeds 64 bits");
        idx = idx * field_->q() + x;
    }
    return idx;
}

Word Code::decode(uint64_t idx) const {
    Word w(n_, 0);
    for (size_t i = n_; i-- > 0;) {
        w[i] = uint8_t(idx % field_->q());
        idx /= field_->q();
    }
    return w;
}

LinearCode LinearCode::from_generator(Matrix g) {
    rref(g);
    Matrix h = kernel(g);
    return LinearCode(std::move(g), std::move(h));
}

LinearCode LinearCode::from_parity_check(Matrix h) {
    Matrix g = kernel(h);
    rref(h);
    return LinearCode(std::move(g), std::move(h));
}

uint64_t LinearCode::size() const {
    uint64_t s = 1;
    for (size_t i = 0; i < dim(); ++i) s *= field().q();
    return s;
}

bool LinearCode::contains(const Word& w) const {
    const Field& f = field();
    for (const Word& row : parity_check_.rows)
        if (dot(f, row, w) != 0) return false;
    return true;
}

std::vector<Word> LinearCode::enumerate() const {
    const Field& f = field();
    const unsigned q = f.q();
    std::vector<Word> out;
    out.reserve(size_t(size()));
    Word cur(length(), 0);
    std::vector<unsigned> digits(dim(), 0);
    out.push_back(cur);
    // odometer: each digit bump adds one generator row (q copies of a row
    // vanish since q is a power of the characteristic)
    for (uint64_t c = 1; c < size(); ++c) {
        for (size_t j = 0;; ++j) {
            word_add_inplace(f, cur, generator_.rows[j]);
            if (++digits[j] < q) break;
            digits[j] = 0;
        }
        out.push_back(cur);
    }
    return out;
}

Code LinearCode::to_code() const { return Code(field(), length(), enumerate(), true); }

size_t LinearCode::min_distance() const {
    if (dim() == 0) throw Error("TooSmall", "min distance needs at least two words");
    size_t best = length() + 1;
    for (const Word& w : enumerate()) {
        size_t wt = word_weight(w);
        if (wt != 0 && wt < best) best = wt;
    }
    return best;
}

size_t min_distance(const Code& c) {
    if (c.size() < 2) throw Error("TooSmall", "min distance needs at least two words");
    if (c.dist_cache_) return *c.dist_cache_;
    size_t best = c.length() + 1;
    const auto& ws = c.words();
    if (c.known_linear()) {
        for (const Word& w : ws) {
            size_t wt = word_weight(w);
            if (wt != 0 && wt < best) best = wt;
        }
    } else {
        for (size_t i = 0; i < ws.size() && best > 1; ++i)
            for (size_t j = i + 1; j < ws.size(); ++j) {
                size_t d = word_distance(ws[i], ws[j]);
                if (d < best) {
                    best = d;
                    if (best == 1) break;
                }
            }
    }
    c.dist_cache_ = best;
    return best;
}

bool min_distance_at_least(const Code& c, size_t d) {
    const auto& ws = c.words();
    if (c.known_linear()) {
        for (const Word& w : ws) {
            size_t wt = word_weight(w);
            if (wt != 0 && wt < d) return false;
        }
        return true;
    }
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i + 1; j < ws.size(); ++j)
            if (word_distance(ws[i], ws[j]) < d) return false;
    return true;
}

WeightDistribution weight_distribution(const Code& c) {
    WeightDistribution wd;
    wd.counts.assign(c.length() + 1, 0);
    for (const Word& w : c.words()) ++wd.counts[word_weight(w)];
    return wd;
}

WeightDistribution weight_distribution(const LinearCode& c) {
    WeightDistribution wd;
    wd.counts.assign(c.length() + 1, 0);
    for (const Word& w : c.enumerate()) ++wd.counts[word_weight(w)];
    return wd;
}

size_t code_rank(const Code& c) {
    if (c.rank_cache_) return *c.rank_cache_;
    size_t r = span_dim(c.field(), c.words());
    c.rank_cache_ = r;
    return r;
}

LinearCode orthogonal(const Code& c) {
    SpanBasis basis(c.field(), c.length());
    for (const Word& w : c.words()) basis.insert(w);
    Matrix span_mat(c.field(), c.length());
    span_mat.rows = basis.rows();
    return LinearCode::from_parity_check(std::move(span_mat));
}

Code translate(const Code& c, const Word& v) {
    if (v.size() != c.length()) throw Error("ShapeMismatch", "translation length mismatch");
    const Field& f = c.field();
    bool zero = word_weight(v) == 0;
    std::vector<Word> out = c.words();
    for (Word& w : out) word_add_inplace(f, w, v);
    return Code(f, c.length(), std::move(out), c.known_linear() && zero);
}

Code monomial_image(const Code& c, const MonomialMap& m) {
    const Field& f = c.field();
    std::vector<Word> out;
    out.reserve(c.size());
    for (const Word& w : c.words()) out.push_back(apply_monomial(f, w, m));
    return Code(f, c.length(), std::move(out), c.known_linear());
}

Partition coset_partition(const Code& ambient, const LinearCode& l) {
    const Field& f = ambient.field();
    if (f.q() != l.field().q() || ambient.length() != l.length())
        throw Error("ShapeMismatch", "ambient and subcode disagree on field or length");
    std::vector<Word> l_words = l.enumerate();
    for (const Word& w : l_words)
        if (!ambient.contains(w)) throw Error("NotSubcode", "subcode word outside ambient set");
    if (ambient.size() % l_words.size() != 0)
        throw Error("NotCosetClosed", "ambient size not a multiple of subcode size");

    std::unordered_set<uint64_t> assigned;
    assigned.reserve(ambient.size() * 2);
    std::vector<Code> parts;
    for (const Word& rep : ambient.words()) {
        if (assigned.count(ambient.encode(rep))) continue;
        std::vector<Word> part;
        part.reserve(l_words.size());
        for (const Word& lw : l_words) {
            Word w = rep;
            word_add_inplace(f, w, lw);
            if (!ambient.contains(w))
                throw Error("NotCosetClosed", "ambient is not a union of cosets");
            uint64_t e = ambient.encode(w);
            if (!assigned.insert(e).second)
                throw Error("NotCosetClosed", "coset overlap detected");
            part.push_back(std::move(w));
        }
        parts.emplace_back(f, ambient.length(), std::move(part));
    }
    return Partition{ambient, std::move(parts)};
}

namespace {

char digit_char(uint8_t v) { return char('0' + v); }

}  // namespace

void write_code(std::ostream& os, const Code& c) {
    const unsigned q = c.field().q();
    os << "q=" << q << " n=" << c.length() << " count=" << c.size();
    if (q > 10) os << " sep=,";
    os << '\n';
    for (const Word& w : c.words()) {
        if (q <= 10) {
            for (uint8_t x : w) os << digit_char(x);
        } else {
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) os << ',';
                os << unsigned(w[i]);
            }
        }
        os << '\n';
    }
}

void write_code_file(const std::string& path, const Code& c) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("IoError", "cannot open " + path + " for writing");
    write_code(os, c);
    if (!os) throw Error("IoError", "write failed: " + path);
}

Code read_code(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw Error("BadFormat", "missing code file header");
    unsigned q = 0;
    size_t n = 0, count = 0;
    bool sep = false;
    {
        std::istringstream hs(header);
        std::string tok;
        while (hs >> tok) {
            if (tok.rfind("q=", 0) == 0)
                q = unsigned(std::stoul(tok.substr(2)));
            else if (tok.rfind("n=", 0) == 0)
                n = std::stoul(tok.substr(2));
            else if (tok.rfind("count=", 0) == 0)
                count = std::stoul(tok.substr(6));
            else if (tok == "sep=,")
                sep = true;
            else
                throw Error("BadFormat", "unknown header token: " + tok);
        }
    }
    if (q < 2) throw Error("BadFormat", "bad or missing q in header");
    const Field& f = Field::get(q);
    std::vector<Word> words;
    words.reserve(count);
    std::string line;
    for (size_t k = 0; k < count; ++k) {
        if (!std::getline(is, line)) throw Error("BadFormat", "truncated code file");
        Word w;
        w.reserve(n);
        if (!sep) {
            for (char ch : line) {
                if (ch < '0' || ch > '9') throw Error("BadFormat", "bad digit in code word");
                w.push_back(uint8_t(ch - '0'));
            }
        } else {
            std::istringstream ls(line);
            std::string cell;
            while (std::getline(ls, cell, ',')) w.push_back(uint8_t(std::stoul(cell)));
        }
        if (w.size() != n) throw Error("BadFormat", "word length disagrees with header");
        words.push_back(std::move(w));
    }
    return Code(f, n, std::move(words));
}

Code read_code_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("IoError", "cannot open " + path);
    return read_code(is);
}

}  // namespace qpc
