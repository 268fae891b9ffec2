#pragma once

#include <optional>
#include <vector>

#include "zartan/field.hpp"

namespace zartan {

// Dense exact matrix over a single field.  Elimination pivots on the first
// nonzero entry in scan order, so results are deterministic.
struct Matrix {
    FieldPtr k;
    size_t rows = 0;
    size_t cols = 0;
    std::vector<std::vector<FElem>> a;

    Matrix() = default;
    Matrix(FieldPtr field, size_t r, size_t c);
    static Matrix identity(const FieldPtr& field, size_t n);

    FElem& at(size_t i, size_t j) { return a[i][j]; }
    const FElem& at(size_t i, size_t j) const { return a[i][j]; }
    void append_row(std::vector<FElem> row);
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<size_t> rref(Matrix& m);
size_t rank(Matrix m);
// Right kernel basis (deterministic: free columns in ascending order).
std::vector<std::vector<FElem>> kernel_basis(const Matrix& m);
// Solve A x = b; nullopt when inconsistent.
std::optional<std::vector<FElem>> solve(const Matrix& m, const std::vector<FElem>& b);
std::optional<Matrix> inverse(const Matrix& m);

std::vector<FElem> mat_vec(const Matrix& m, const std::vector<FElem>& v);
Matrix mat_mul(const Matrix& a, const Matrix& b);
bool is_identity(const Matrix& m);

// Rank of the matrix whose rows are the given vectors.
size_t span_rank(const FieldPtr& k, const std::vector<std::vector<FElem>>& rows);
// True when the two row spans coincide.
bool same_span(const FieldPtr& k, const std::vector<std::vector<FElem>>& a,
               const std::vector<std::vector<FElem>>& b);

}  // namespace zartan
