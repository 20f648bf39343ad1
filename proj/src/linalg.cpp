#include "lghodge/linalg.hpp"

#include "lghodge/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <utility>

namespace lgh {

RrefResult rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        Rational pivot = m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(m), std::move(pivots), r};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Rational determinant(const Matrix& m) {
    if (!m.square()) throw DimensionError("determinant: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    // Clear denominators row by row; det(M) = det(integers) / product of row scales.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, Int(denominator(m(i, j))));
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Int(numerator(m(i, j))) * (l / Int(denominator(m(i, j))));
        scale *= l;
    }

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;  // exact (Bareiss)
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Int det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(det) / Rational(scale);
}

std::optional<Vector> solve_particular(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw DimensionError("solve: rhs length != rows");
    Matrix aug = Matrix::hcat(m, Matrix::from_columns(m.rows(), {b}));
    RrefResult r = rref(std::move(aug));
    for (std::size_t k = 0; k < r.rank; ++k)
        if (r.pivots[k] == m.cols()) return std::nullopt;  // pivot in the rhs column
    Vector x(m.cols(), Rational(0));
    for (std::size_t k = 0; k < r.rank; ++k) x[r.pivots[k]] = r.matrix(k, m.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    if (!m.square()) throw DimensionError("inverse: matrix must be square");
    const std::size_t n = m.rows();
    RrefResult r = rref(Matrix::hcat(m, Matrix::identity(n)));
    if (r.rank != n) throw DomainError("inverse: matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
    return inv;
}

}  // namespace lgh
