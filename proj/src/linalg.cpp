#include "mgi/linalg.hpp"

#include "mgi/errors.hpp"

#include <utility>

namespace mgi {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

namespace {

// Compares |a| < |b| for nonzero integers without allocating.
bool smaller_magnitude(const Integer& a, const Integer& b)
{
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

// Each row of `a` multiplied by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const Matrix& a)
{
    std::vector<std::vector<Integer>> w(a.rows(), std::vector<Integer>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer scale = 1;
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < a.cols(); ++j)
            w[i][j] = a(i, j).get_num() * (scale / a(i, j).get_den());
    }
    return w;
}

// Fraction-free (Bareiss) row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<std::vector<Integer>>& w, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    const std::size_t rows = w.size();
    std::size_t row = 0;
    Integer previous = 1;
    Integer t;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t i = row; i < rows; ++i)
            if (w[i][col] != 0 && (pivot == rows || smaller_magnitude(w[i][col], w[pivot][col])))
                pivot = i;
        if (pivot == rows)
            continue;
        std::swap(w[row], w[pivot]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                t = w[row][col] * w[i][j];
                t -= w[i][col] * w[row][j];
                mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            w[i][col] = 0;
        }
        previous = w[row][col];
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Matrix solve(const Matrix& a, const Matrix& b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n)
        throw Error(ErrorKind::Precondition, "solve: shape mismatch");
    const std::size_t m = b.cols();
    const std::size_t width = n + m;

    // Integer augmented matrix [A | B], each row cleared of denominators.
    std::vector<std::vector<Integer>> w(n, std::vector<Integer>(width));
    for (std::size_t i = 0; i < n; ++i) {
        Integer scale = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), b(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            w[i][j] = a(i, j).get_num() * (scale / a(i, j).get_den());
        for (std::size_t j = 0; j < m; ++j)
            w[i][n + j] = b(i, j).get_num() * (scale / b(i, j).get_den());
    }

    Integer previous = 1;
    Integer t;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i)
            if (w[i][k] != 0 && (pivot == n || smaller_magnitude(w[i][k], w[pivot][k])))
                pivot = i;
        if (pivot == n)
            throw Error(ErrorKind::Precondition, "solve: singular system");
        std::swap(w[k], w[pivot]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j) {
                t = w[k][k] * w[i][j];
                t -= w[i][k] * w[k][j];
                mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            w[i][k] = 0;
        }
        previous = w[k][k];
    }

    Matrix x(n, m);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t ii = n; ii-- > 0;) {
            Rational acc(w[ii][n + c]);
            for (std::size_t j = ii + 1; j < n; ++j)
                if (w[ii][j] != 0)
                    acc -= Rational(w[ii][j]) * x(j, c);
            x(ii, c) = acc / Rational(w[ii][ii]);
        }
    }
    return x;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& a)
{
    auto w = integer_rows(a);
    const auto pivots = echelon(w, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(a.cols());
        v[free] = 1;
        for (std::size_t r = pivots.size(); r-- > 0;) {
            Rational acc;
            for (std::size_t j = pivots[r] + 1; j < a.cols(); ++j)
                if (v[j] != 0 && w[r][j] != 0)
                    acc -= Rational(w[r][j]) * v[j];
            v[pivots[r]] = acc / Rational(w[r][pivots[r]]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix& a)
{
    auto w = integer_rows(a);
    return echelon(w, a.cols()).size();
}

}  // namespace mgi
