#ifndef QPC_LINALG_HPP
#define QPC_LINALG_HPP

#include <cstdint>
#include <vector>

#include "qpc/field.hpp"

namespace qpc {

// A vector over GF(q): entries in [0, q).  The owning Field is passed
// alongside; all words in one computation share it.
using Word = std::vector<uint8_t>;

struct Matrix {
    const Field* field = nullptr;
    size_t cols = 0;
    std::vector<Word> rows;

    Matrix() = default;
    Matrix(const Field& f, size_t cols_) : field(&f), cols(cols_) {}
    Matrix(const Field& f, std::vector<Word> rows_);

    static Matrix identity(const Field& f, size_t n);
};

// Coordinate permutation plus nonzero per-coordinate scaling.  Together
// with translations these generate code equivalence.
struct MonomialMap {
    std::vector<size_t> perm;  // output coordinate of input coordinate i
    Word scales;               // nonzero, indexed by output coordinate

    MonomialMap inverse(const Field& f) const;
};

// Reduced row echelon form in place (lowest-index pivots, zero rows
// dropped); returns the rank.
size_t rref(Matrix& m);

size_t rank(const Matrix& m);

Matrix transpose(const Matrix& m);

// Basis of the right null space {v : M v^T = 0}, canonicalized to RREF.
// Row count is cols - rank(m).
Matrix kernel(const Matrix& m);

uint8_t dot(const Field& f, const Word& a, const Word& b);

Word mat_vec(const Matrix& m, const Word& v);  // M v^T

// Incremental elimination basis for span and membership queries.
class SpanBasis {
  public:
    explicit SpanBasis(const Field& f, size_t n) : field_(&f), cols_(n) {}

    // Returns true if v enlarged the span.
    bool insert(const Word& v);
    bool contains(const Word& v) const;
    size_t dim() const { return rows_.size(); }
    const std::vector<Word>& rows() const { return rows_; }

  private:
    const Field* field_;
    size_t cols_;
    std::vector<Word> rows_;        // row-echelon, pivot-normalized
    std::vector<size_t> pivots_;    // pivot column per row, increasing
};

size_t span_dim(const Field& f, const std::vector<Word>& vectors);
bool in_span(const Field& f, const Word& v, const std::vector<Word>& basis);

// Coordinate i of the output is scales[i] * v[j] where perm[j] = i.
Word apply_monomial(const Field& f, const Word& v, const MonomialMap& m);

}  // namespace qpc

#endif
