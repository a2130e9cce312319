#include "qpc/linalg.hpp"

#include "qpc/error.hpp"

namespace qpc {

Matrix::Matrix(const Field& f, std::vector<Word> rows_) : field(&f), rows(std::move(rows_)) {
    cols = rows.empty() ? 0 : rows[0].size();
    for (const Word& r : rows)
        if (r.size() != cols) throw Error("ShapeMismatch", "ragged matrix rows");
}

Matrix Matrix::identity(const Field& f, size_t n) {
    Matrix m(f, n);
    m.rows.assign(n, Word(n, 0));
    for (size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
}

namespace {

void row_axpy(const Field& f, Word& dst, const Word& src, uint8_t c) {
    if (c == 0) return;
    for (size_t j = 0; j < dst.size(); ++j)
        dst[j] = f.add(dst[j], f.mul(c, src[j]));
}

void row_scale(const Field& f, Word& row, uint8_t c) {
    for (uint8_t& x : row) x = f.mul(x, c);
}

}  // namespace

size_t rref(Matrix& m) {
    const Field& f = *m.field;
    size_t pivot_row = 0;
    for (size_t col = 0; col < m.cols && pivot_row < m.rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < m.rows.size() && m.rows[sel][col] == 0) ++sel;
        if (sel == m.rows.size()) continue;
        std::swap(m.rows[pivot_row], m.rows[sel]);
        row_scale(f, m.rows[pivot_row], f.inv(m.rows[pivot_row][col]));
        for (size_t i = 0; i < m.rows.size(); ++i) {
            if (i == pivot_row || m.rows[i][col] == 0) continue;
            row_axpy(f, m.rows[i], m.rows[pivot_row], f.neg(m.rows[i][col]));
        }
        ++pivot_row;
    }
    m.rows.resize(pivot_row);
    return pivot_row;
}

size_t rank(const Matrix& m) {
    Matrix copy = m;
    return rref(copy);
}

Matrix transpose(const Matrix& m) {
    Matrix t(*m.field, m.rows.size());
    t.rows.assign(m.cols, Word(m.rows.size(), 0));
    for (size_t i = 0; i < m.rows.size(); ++i)
        for (size_t j = 0; j < m.cols; ++j) t.rows[j][i] = m.rows[i][j];
    return t;
}

Matrix kernel(const Matrix& m) {
    const Field& f = *m.field;
    Matrix red = m;
    size_t rk = rref(red);

    std::vector<size_t> pivot_col(rk);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t i = 0, col = 0; i < rk; ++i) {
        while (red.rows[i][col] == 0) ++col;
        pivot_col[i] = col;
        is_pivot[col] = true;
    }

    Matrix basis(f, m.cols);
    for (size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Word v(m.cols, 0);
        v[free] = 1;
        for (size_t i = 0; i < rk; ++i)
            v[pivot_col[i]] = f.neg(red.rows[i][free]);
        basis.rows.push_back(std::move(v));
    }
    rref(basis);  // canonical form for stable fixtures
    return basis;
}

uint8_t dot(const Field& f, const Word& a, const Word& b) {
    uint8_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

Word mat_vec(const Matrix& m, const Word& v) {
    Word out(m.rows.size());
    for (size_t i = 0; i < m.rows.size(); ++i) out[i] = dot(*m.field, m.rows[i], v);
    return out;
}

bool SpanBasis::insert(const Word& v) {
    const Field& f = *field_;
    Word w = v;
    for (size_t i = 0; i < rows_.size(); ++i)
        if (w[pivots_[i]] != 0) row_axpy(f, w, rows_[i], f.neg(w[pivots_[i]]));
    size_t piv = 0;
    while (piv < cols_ && w[piv] == 0) ++piv;
    if (piv == cols_) return false;
    row_scale(f, w, f.inv(w[piv]));
    // keep rows ordered by pivot column
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + long(pos), std::move(w));
    pivots_.insert(pivots_.begin() + long(pos), piv);
    return true;
}

bool SpanBasis::contains(const Word& v) const {
    const Field& f = *field_;
    Word w = v;
    for (size_t i = 0; i < rows_.size(); ++i)
        if (w[pivots_[i]] != 0) row_axpy(f, w, rows_[i], f.neg(w[pivots_[i]]));
    for (uint8_t x : w)
        if (x != 0) return false;
    return true;
}

size_t span_dim(const Field& f, const std::vector<Word>& vectors) {
    if (vectors.empty()) return 0;
    SpanBasis basis(f, vectors[0].size());
    for (const Word& v : vectors) basis.insert(v);
    return basis.dim();
}

bool in_span(const Field& f, const Word& v, const std::vector<Word>& basis_vecs) {
    SpanBasis basis(f, v.size());
    for (const Word& b : basis_vecs) basis.insert(b);
    return basis.contains(v);
}

Word apply_monomial(const Field& f, const Word& v, const MonomialMap& m) {
    if (m.perm.size() != v.size() || m.scales.size() != v.size())
        throw Error("ShapeMismatch", "monomial map size does not match vector length");
    Word out(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) out[m.perm[i]] = f.mul(m.scales[m.perm[i]], v[i]);
    return out;
}

MonomialMap MonomialMap::inverse(const Field& f) const {
    MonomialMap inv;
    inv.perm.resize(perm.size());
    inv.scales.resize(scales.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        inv.perm[perm[i]] = i;
        inv.scales[i] = f.inv(scales[perm[i]]);
    }
    return inv;
}

}  // namespace qpc
