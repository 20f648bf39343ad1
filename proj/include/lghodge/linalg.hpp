#pragma once

#include "lghodge/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lgh {

struct RrefResult {
    Matrix matrix;                     // the unique reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column per nonzero row
    std::size_t rank = 0;
};

RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rational determinant(const Matrix& m);

/// One solution of M x = b with all free variables set to zero, or nullopt
/// when the system is inconsistent. Deterministic.
std::optional<Vector> solve_particular(const Matrix& m, const Vector& b);

/// Inverse of a square invertible matrix; throws DomainError when singular.
Matrix inverse(const Matrix& m);

}  // namespace lgh
