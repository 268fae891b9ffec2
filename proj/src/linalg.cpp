#include "zartan/linalg.hpp"

namespace zartan {

Matrix::Matrix(FieldPtr field, size_t r, size_t c) : k(std::move(field)), rows(r), cols(c) {
    a.assign(rows, std::vector<FElem>(cols, k->zero()));
}

Matrix Matrix::identity(const FieldPtr& field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

void Matrix::append_row(std::vector<FElem> row) {
    if (row.size() != cols) throw InvariantViolation("append_row: width mismatch");
    a.push_back(std::move(row));
    ++rows;
}

std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t pr = r;
        while (pr < m.rows && is_zero(m.at(pr, c))) ++pr;
        if (pr == m.rows) continue;
        std::swap(m.a[r], m.a[pr]);
        FElem inv = invert(m.at(r, c));
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) = mul(m.at(r, j), inv);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            FElem f = m.at(i, c);
            for (size_t j = c; j < m.cols; ++j)
                m.at(i, j) = sub(m.at(i, j), mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(Matrix m) { return rref(m).size(); }

std::vector<std::vector<FElem>> kernel_basis(const Matrix& m) {
    Matrix e = m;
    std::vector<size_t> pivots = rref(e);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FElem>> basis;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<FElem> v(m.cols, m.k->zero());
        v[f] = m.k->one();
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = neg(e.at(i, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FElem>> solve(const Matrix& m, const std::vector<FElem>& b) {
    if (b.size() != m.rows) throw InvariantViolation("solve: rhs length mismatch");
    Matrix aug(m.k, m.rows, m.cols + 1);
    for (size_t i = 0; i < m.rows; ++i) {
        for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    std::vector<FElem> x(m.cols, m.k->zero());
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows != m.cols) throw InvariantViolation("inverse: matrix not square");
    size_t n = m.rows;
    Matrix aug(m.k, n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = m.k->one();
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
    Matrix inv(m.k, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::vector<FElem> mat_vec(const Matrix& m, const std::vector<FElem>& v) {
    if (v.size() != m.cols) throw InvariantViolation("mat_vec: length mismatch");
    std::vector<FElem> out(m.rows, m.k->zero());
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) out[i] = add(out[i], mul(m.at(i, j), v[j]));
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw InvariantViolation("mat_mul: shape mismatch");
    Matrix c(a.k, a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t l = 0; l < a.cols; ++l) {
            if (is_zero(a.at(i, l))) continue;
            for (size_t j = 0; j < b.cols; ++j)
                c.at(i, j) = add(c.at(i, j), mul(a.at(i, l), b.at(l, j)));
        }
    return c;
}

bool is_identity(const Matrix& m) {
    if (m.rows != m.cols) return false;
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) {
            bool want_one = (i == j);
            if (want_one ? !equal(m.at(i, j), m.k->one()) : !is_zero(m.at(i, j))) return false;
        }
    return true;
}

size_t span_rank(const FieldPtr& k, const std::vector<std::vector<FElem>>& rows) {
    if (rows.empty()) return 0;
    Matrix m(k, rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw InvariantViolation("span_rank: ragged rows");
        m.a[i] = rows[i];
    }
    return rank(std::move(m));
}

bool same_span(const FieldPtr& k, const std::vector<std::vector<FElem>>& a,
               const std::vector<std::vector<FElem>>& b) {
    size_t ra = span_rank(k, a);
    size_t rb = span_rank(k, b);
    if (ra != rb) return false;
    std::vector<std::vector<FElem>> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return span_rank(k, all) == ra;
}

}  // namespace zartan
