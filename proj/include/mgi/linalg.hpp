#pragma once

#include "mgi/rational.hpp"

#include <vector>

namespace mgi {

// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Solves A X = B for square nonsingular A. Rows are scaled to integers and
/// reduced by fraction-free (Bareiss) elimination, choosing at each step the
/// nonzero pivot of smallest magnitude. Throws Precondition if A is singular.
Matrix solve(const Matrix& a, const Matrix& b);

/// Basis of {x : A x = 0}, one vector per free column of the reduced row
/// echelon form (free entry 1, other free entries 0).
std::vector<std::vector<Rational>> nullspace(const Matrix& a);

std::size_t rank(const Matrix& a);

}  // namespace mgi
