#ifndef QPC_CODES_HPP
#define QPC_CODES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qpc/linalg.hpp"

namespace qpc {

struct WeightDistribution {
    std::vector<uint64_t> counts;  // counts[i] = number of words of weight i

    bool operator==(const WeightDistribution&) const = default;
};

// An explicit set of length-n words over GF(q), kept sorted for canonical
// serialization.  Immutable after construction; metric caches are filled
// lazily.
class Code {
  public:
    Code(const Field& f, size_t n, std::vector<Word> words, bool known_linear = false);

    const Field& field() const { return *field_; }
    size_t length() const { return n_; }
    size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }
    bool contains(const Word& w) const;
    bool known_linear() const { return known_linear_; }

    // Radix-q integer with the first coordinate most significant, so
    // integer order equals lexicographic word order.
    uint64_t encode(const Word& w) const;
    Word decode(uint64_t idx) const;

  private:
    const Field* field_;
    size_t n_;
    std::vector<Word> words_;
    bool known_linear_;

    friend size_t code_rank(const Code&);
    friend size_t min_distance(const Code&);
    mutable std::optional<size_t> rank_cache_;
    mutable std::optional<size_t> dist_cache_;
};

// Generator / parity-check view of a linear code.  Both matrices are kept
// in canonical RREF.
class LinearCode {
  public:
    // Rows of g span the code; reduced internally.
    static LinearCode from_generator(Matrix g);
    // Code = right kernel of h.
    static LinearCode from_parity_check(Matrix h);

    const Field& field() const { return *generator_.field; }
    size_t length() const { return generator_.cols; }
    size_t dim() const { return generator_.rows.size(); }
    uint64_t size() const;

    const Matrix& generator() const { return generator_; }
    const Matrix& parity_check() const { return parity_check_; }

    bool contains(const Word& w) const;
    std::vector<Word> enumerate() const;  // all q^dim words
    Code to_code() const;
    size_t min_distance() const;  // minimum nonzero weight

  private:
    LinearCode(Matrix g, Matrix h) : generator_(std::move(g)), parity_check_(std::move(h)) {}
    Matrix generator_;
    Matrix parity_check_;
};

// Pairwise-disjoint parts covering the ambient set; part 0 contains the
// all-zero word when the ambient does.
struct Partition {
    Code ambient;
    std::vector<Code> parts;
};

size_t min_distance(const Code& c);  // throws TooSmall if |C| < 2
// True iff every pair of distinct words is at distance >= d (early exit).
bool min_distance_at_least(const Code& c, size_t d);
WeightDistribution weight_distribution(const Code& c);
WeightDistribution weight_distribution(const LinearCode& c);
size_t code_rank(const Code& c);
LinearCode orthogonal(const Code& c);  // dual of the linear span
Code translate(const Code& c, const Word& v);
Code monomial_image(const Code& c, const MonomialMap& m);

// Cosets of L inside ambient; ambient must be a union of L-cosets.
// Parts are ordered by their lexicographically smallest member.
Partition coset_partition(const Code& ambient, const LinearCode& l);

// Canonical code file format: header "q=<q> n=<n> count=<k>" (plus
// " sep=," when q > 10), then k sorted words, LF endings, bit-exact
// round-trip.
void write_code(std::ostream& os, const Code& c);
void write_code_file(const std::string& path, const Code& c);
Code read_code(std::istream& is);
Code read_code_file(const std::string& path);

}  // namespace qpc

#endif
