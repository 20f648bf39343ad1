#pragma once

#include "lghodge/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace lgh {

/// Dense matrix over the rationals, row-major. Immutable in spirit: all
/// operations return fresh values; there is no shared state.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    /// Convenience for integer-valued literals in tests and model builders.
    static Matrix of(std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_columns(std::size_t ambient, const std::vector<Vector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool is_zero() const;

    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    Matrix transpose() const;
    Matrix pow(std::size_t k) const;  // square only
    Vector apply(const Vector& v) const;

    void swap_rows(std::size_t a, std::size_t b);

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    /// [A B] side by side; row counts must agree.
    static Matrix hcat(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

}  // namespace lgh
