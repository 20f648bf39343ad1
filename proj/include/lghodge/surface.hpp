#pragma once

#include "lghodge/les.hpp"
#include "lghodge/matrix.hpp"

#include <array>
#include <cstdint>

namespace lgh {

/// Monodromy around infinity on the relative second homology, assembled
/// from a mapping-torus tube lemma: a map ell from fiber 1-cycles into the
/// relative space with boundary(ell(x)) = (fiber monodromy - id)(x), and
/// T = id + ell . boundary.
struct MonodromyAssembly {
    std::size_t invariant_dim = 0;  // dimension of the cycle-class block, 10 - d
    Matrix ell;                     // (12-d) x 2
    Matrix boundary;                // 2 x (12-d), projection onto the lifted fiber block
    Matrix fiber_monodromy;         // 2 x 2, unipotent
    Matrix t_rel;                   // id + ell . boundary
};

/// Topological data of the compactified model at degree d: cohomology
/// tables of the surface, the boundary wheel, the open part, and the
/// relative pair, plus the explicit relative monodromy and its logarithm.
struct SurfaceModel {
    int d = 0;
    int euler = 12;
    std::array<std::int64_t, 5> h_surface{};    // h^i of the compact surface
    std::array<std::int64_t, 3> h_boundary{};   // h^i of the boundary divisor
    std::array<std::int64_t, 5> hc_open{};      // compactly supported h^i of the open part
    std::array<std::int64_t, 5> h_open{};       // h^i of the open part (Poincare duality)
    std::array<std::int64_t, 5> h_rel{};        // dim H^k(pair), concentrated in degree 2
    Matrix t_rel;
    Matrix n_rel;            // unipotent_log(t_rel)
    Matrix fiber_monodromy;  // action on fiber 1-cycles
};

/// The dimension chases, exposed for inspection and testing. Each returns a
/// ready-to-solve spec with the known dimensions and map facts filled in.
///
/// Boundary cohomology from the normalization sequence of the d-cycle
/// (d >= 1): constants on the cycle, constants on d disjoint lines, and the
/// d skyscrapers at the nodes.
ExactSequenceSpec boundary_normalization_chase(int d);
/// Compactly supported cohomology of the open part from
/// 0 -> extension by zero -> constants on the surface -> constants on the
/// boundary -> 0, with both restriction maps surjective.
ExactSequenceSpec compact_support_chase(int d);
/// Relative cohomology of (open part, smooth fiber) from the pair sequence,
/// with the degree-0 restriction injective and the degree-2 one surjective.
ExactSequenceSpec relative_cohomology_chase(int d);

MonodromyAssembly build_relative_monodromy(int d);

SurfaceModel build_surface_model(int d);

/// Fano-type predicate: on the only nonzero relative group (degree 2,
/// a = 0) the logarithm must satisfy N^2 != 0 and N^3 = 0; the conditions
/// hold vacuously on the vanishing groups.
bool fano_type(const SurfaceModel& model);

}  // namespace lgh
