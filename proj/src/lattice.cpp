#include "lghodge/lattice.hpp"

#include "lghodge/errors.hpp"
#include "lghodge/linalg.hpp"

namespace lgh {

WheelLattice wheel_gram(int d) {
    if (d < 2) throw DomainError("wheel_gram: a wheel needs at least 2 components");
    const std::size_t n = static_cast<std::size_t>(d);
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
    if (d == 2) {
        // Two rational curves meeting at the two nodes of the cycle.
        g(0, 1) = g(1, 0) = 2;
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = (i + 1) % n;
            g(i, j) = 1;
            g(j, i) = 1;
        }
    }
    return WheelLattice{d, g};
}

Matrix section_augmented_matrix(int d) {
    WheelLattice wheel = wheel_gram(d);
    const std::size_t n = static_cast<std::size_t>(d);
    Matrix a(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = wheel.gram(i, j);
    a(n - 1, n - 1) = 1;  // the section meets only the last component, once
    return a;
}

Rational section_augmented_det(int d) { return determinant(section_augmented_matrix(d)); }

RestrictionSurjectivity restriction_surjective(int d) {
    if (d < 0 || d > 9) throw DomainError("restriction_surjective: d must be in 0..9");
    if (d <= 1)
        return RestrictionSurjectivity{d, true, SurjectivityCertificate::AmpleRestriction,
                                       std::nullopt};
    Rational det = section_augmented_det(d);
    return RestrictionSurjectivity{d, det != 0, SurjectivityCertificate::GramDeterminant, det};
}

}  // namespace lgh
