#pragma once

#include "lghodge/linalg.hpp"
#include "lghodge/matrix.hpp"

#include <cstddef>
#include <vector>

namespace lgh {

/// A linear subspace of Q^ambient, stored in a canonical form (reduced
/// column echelon basis) so that two Subspace values are equal exactly when
/// they are the same subspace.
class Subspace {
public:
    /// The zero subspace of Q^ambient.
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}

    static Subspace full(std::size_t ambient);
    /// Span of the columns; dependent spanning sets are fine.
    static Subspace from_columns(const Matrix& columns);
    static Subspace from_vectors(std::size_t ambient, const std::vector<Vector>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    /// Canonical basis, one column per basis vector (ambient x dim).
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t j) const { return basis_.col(j); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;  // always canonical
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Null space of m, as a subspace of Q^cols.
Subspace kernel(const Matrix& m);
/// Column span of m, as a subspace of Q^rows.
Subspace image(const Matrix& m);
/// Image of a subspace under a linear map (columns of m index the ambient of s).
Subspace apply(const Matrix& m, const Subspace& s);
/// { x : m x lies in target }, a subspace of Q^cols.
Subspace preimage(const Matrix& m, const Subspace& target);

}  // namespace lgh
