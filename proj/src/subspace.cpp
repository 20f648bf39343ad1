#include "lghodge/subspace.hpp"

#include "lghodge/errors.hpp"

namespace lgh {

namespace {

// Canonical basis of the column span: reduced row echelon form of the
// transpose, nonzero rows transposed back into columns.
Matrix canonical_column_basis(const Matrix& columns) {
    RrefResult r = rref(columns.transpose());
    Matrix basis(columns.rows(), r.rank);
    for (std::size_t k = 0; k < r.rank; ++k)
        for (std::size_t i = 0; i < columns.rows(); ++i) basis(i, k) = r.matrix(k, i);
    return basis;
}

}  // namespace

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient);
    return s;
}

Subspace Subspace::from_columns(const Matrix& columns) {
    Subspace s(columns.rows());
    s.basis_ = canonical_column_basis(columns);
    return s;
}

Subspace Subspace::from_vectors(std::size_t ambient, const std::vector<Vector>& vectors) {
    return from_columns(Matrix::from_columns(ambient, vectors));
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionError("contains: ambient dimension mismatch");
    Matrix aug = Matrix::hcat(basis_, Matrix::from_columns(ambient_, {v}));
    return rank(aug) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("contains: ambient dimension mismatch");
    if (other.dim() > dim()) return false;
    return rank(Matrix::hcat(basis_, other.basis_)) == dim();
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("sum: ambient dimension mismatch");
    return Subspace::from_columns(Matrix::hcat(a.basis(), b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("intersection: ambient dimension mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_dim());
    // Solutions of A x = -B y; the A-parts of the kernel span the intersection.
    Subspace k = kernel(Matrix::hcat(a.basis(), b.basis()));
    std::vector<Vector> vecs;
    for (std::size_t j = 0; j < k.dim(); ++j) {
        Vector coeffs = k.basis_vector(j);
        Vector x(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(a.dim()));
        vecs.push_back(a.basis().apply(x));
    }
    return Subspace::from_vectors(a.ambient_dim(), vecs);
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vector v(m.cols(), Rational(0));
        v[c] = 1;
        for (std::size_t k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.matrix(k, c);
        vecs.push_back(std::move(v));
    }
    return Subspace::from_vectors(m.cols(), vecs);
}

Subspace image(const Matrix& m) { return Subspace::from_columns(m); }

Subspace apply(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw DimensionError("apply: shape mismatch");
    return Subspace::from_columns(m * s.basis());
}

Subspace preimage(const Matrix& m, const Subspace& target) {
    if (m.rows() != target.ambient_dim()) throw DimensionError("preimage: shape mismatch");
    if (target.dim() == 0) return kernel(m);
    Subspace k = kernel(Matrix::hcat(m, target.basis()));
    std::vector<Vector> vecs;
    for (std::size_t j = 0; j < k.dim(); ++j) {
        Vector coeffs = k.basis_vector(j);
        vecs.emplace_back(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(m.cols()));
    }
    return Subspace::from_vectors(m.cols(), vecs);
}

}  // namespace lgh
