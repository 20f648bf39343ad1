#pragma once

#include "lghodge/matrix.hpp"

#include <optional>

namespace lgh {

/// Intersection lattice of a cycle of d rational curves: every component
/// has self-intersection -2 and meets its two cyclic neighbours once (the
/// two components of a 2-cycle meet twice).
struct WheelLattice {
    int d = 0;
    Matrix gram;
};

/// Requires d >= 2; the degenerate boundary shapes (d = 0 smooth, d = 1
/// nodal) carry no wheel Gram matrix.
WheelLattice wheel_gram(int d);

/// The pairing matrix (F_i . D_j) with F_1..F_{d-1} the first wheel
/// components and F_d a section meeting only the last component.
Matrix section_augmented_matrix(int d);

/// Its exact determinant; equals (-1)^{d-1} d.
Rational section_augmented_det(int d);

enum class SurjectivityCertificate {
    GramDeterminant,    // nonzero determinant of the section-augmented pairing
    AmpleRestriction,   // irreducible boundary: restrict an ample class (axiom)
};

struct RestrictionSurjectivity {
    int d = 0;
    bool surjective = false;
    SurjectivityCertificate certificate = SurjectivityCertificate::GramDeterminant;
    std::optional<Rational> det;  // present for the determinant certificate
};

/// Surjectivity of the restriction H^2 of the surface -> H^2 of the
/// boundary divisor, with the certificate that witnesses it.
RestrictionSurjectivity restriction_surjective(int d);

}  // namespace lgh
