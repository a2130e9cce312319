#include "qpc/constructions.hpp"

#include <filesystem>
#include <fstream>

#include "qpc/error.hpp"

namespace qpc {

size_t hamming_length(unsigned q, unsigned m) {
    if (m < 2) throw Error("BadParameter", "m must be at least 2");
    size_t num = 1;
    for (unsigned i = 0; i < m; ++i) num *= q;
    return (num - 1) / (q - 1);
}

Matrix hamming_parity_check(unsigned q, unsigned m) {
    const Field& f = Field::get(q);
    size_t n = hamming_length(q, m);
    Matrix h(f, n);
    h.rows.assign(m, Word(n, 0));
    size_t total = (n * (q - 1)) + 1;  // q^m
    size_t col = 0;
    for (size_t v = 1; v < total; ++v) {
        Word c(m, 0);
        size_t x = v;
        for (size_t i = m; i-- > 0;) {
            c[i] = uint8_t(x % q);
            x /= q;
        }
        size_t lead = 0;
        while (c[lead] == 0) ++lead;
        if (c[lead] != 1) continue;
        for (size_t i = 0; i < m; ++i) h.rows[i][col] = c[i];
        ++col;
    }
    return h;
}

LinearCode hamming_code(unsigned q, unsigned m) {
    return LinearCode::from_parity_check(hamming_parity_check(q, m));
}

LinearCode simplex_code(unsigned q, unsigned m) {
    return LinearCode::from_generator(hamming_parity_check(q, m));
}

LinearCode trivial_mds(unsigned q, size_t n) {
    if (n < 2) throw Error("BadParameter", "trivial MDS needs n >= 2");
    const Field& f = Field::get(q);
    Matrix h(f, n);
    h.rows.assign(1, Word(n, 1));
    return LinearCode::from_parity_check(std::move(h));
}

LinearCode extract_cpp(unsigned q, unsigned m) {
    Matrix h = hamming_parity_check(q, m + 1);
    // the last q^m columns; their top row is all ones, so the kernel sums to 0
    size_t qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= q;
    Matrix sub(*h.field, qm);
    sub.rows.assign(h.rows.size(), Word(qm, 0));
    for (size_t i = 0; i < h.rows.size(); ++i)
        for (size_t j = 0; j < qm; ++j) sub.rows[i][j] = h.rows[i][h.cols - qm + j];
    return LinearCode::from_parity_check(std::move(sub));
}

Code full_space(unsigned q, size_t n) {
    const Field& f = Field::get(q);
    uint64_t total = 1;
    for (size_t i = 0; i < n; ++i) {
        if (total > (uint64_t(1) << 40)) throw Error("TooLarge", "q^n too large to enumerate");
        total *= q;
    }
    std::vector<Word> words;
    words.reserve(size_t(total));
    Word cur(n, 0);
    words.push_back(cur);
    for (uint64_t v = 1; v < total; ++v) {
        for (size_t i = n; i-- > 0;) {
            if (++cur[i] < q) break;
            cur[i] = 0;
        }
        words.push_back(cur);
    }
    return Code(f, n, std::move(words));
}

Partition mds_partition(unsigned q, unsigned m) {
    if (m < 2) throw Error("BadParameter", "m must be at least 2");
    size_t qm = 1;
    for (unsigned i = 0; i < m; ++i) qm *= q;
    return coset_partition(trivial_mds(q, qm).to_code(), extract_cpp(q, m));
}

Partition space_partition(unsigned q, unsigned m) {
    size_t n = hamming_length(q, m);
    return coset_partition(full_space(q, n), hamming_code(q, m));
}

void write_partition_dir(const std::string& dir, const Partition& p) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::ofstream mf(fs::path(dir) / "manifest.txt", std::ios::binary);
    if (!mf) throw Error("IoError", "cannot write manifest in " + dir);
    mf << "q=" << p.ambient.field().q() << " n=" << p.ambient.length()
       << " parts=" << p.parts.size() << '\n';
    for (size_t i = 0; i < p.parts.size(); ++i)
        write_code_file((fs::path(dir) / ("part" + std::to_string(i) + ".code")).string(),
                        p.parts[i]);
}

Partition read_partition_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    std::ifstream mf(fs::path(dir) / "manifest.txt", std::ios::binary);
    if (!mf) throw Error("IoError", "cannot read manifest in " + dir);
    std::string tok;
    unsigned q = 0;
    size_t n = 0, k = 0;
    while (mf >> tok) {
        if (tok.rfind("q=", 0) == 0) q = unsigned(std::stoul(tok.substr(2)));
        else if (tok.rfind("n=", 0) == 0) n = std::stoul(tok.substr(2));
        else if (tok.rfind("parts=", 0) == 0) k = std::stoul(tok.substr(6));
        else throw Error("BadFormat", "unknown manifest token: " + tok);
    }
    if (q < 2 || k == 0) throw Error("BadFormat", "bad partition manifest");
    std::vector<Code> parts;
    parts.reserve(k);
    std::vector<Word> all;
    for (size_t i = 0; i < k; ++i) {
        Code c = read_code_file((fs::path(dir) / ("part" + std::to_string(i) + ".code")).string());
        if (c.field().q() != q || c.length() != n)
            throw Error("BadFormat", "partition part disagrees with manifest");
        all.insert(all.end(), c.words().begin(), c.words().end());
        parts.push_back(std::move(c));
    }
    Code ambient(Field::get(q), n, std::move(all));  // throws on overlap
    return Partition{std::move(ambient), std::move(parts)};
}

}  // namespace qpc
