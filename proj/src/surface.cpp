#include "lghodge/surface.hpp"

#include "lghodge/errors.hpp"
#include "lghodge/lattice.hpp"
#include "lghodge/linalg.hpp"
#include "lghodge/nilpotent.hpp"
#include "lghodge/subspace.hpp"

#include <stdexcept>
#include <string>

namespace lgh {

namespace {

void require_degree(int d, const char* who) {
    if (d < 0 || d > 9) throw DomainError(std::string(who) + ": d must be in 0..9");
}

std::array<std::int64_t, 5> surface_cohomology() { return {1, 0, 10, 0, 1}; }

std::array<std::int64_t, 3> boundary_cohomology(int d) {
    if (d == 0) return {1, 2, 1};  // smooth elliptic curve
    ChaseSolution sol = solve(boundary_normalization_chase(d));
    if (sol.status != ChaseStatus::Solved)
        throw std::logic_error("boundary cohomology chase did not solve");
    return {sol.dim("H^0(D)"), sol.dim("H^1(D)"), sol.dim("H^2(D)")};
}

}  // namespace

ExactSequenceSpec boundary_normalization_chase(int d) {
    require_degree(d, "boundary_normalization_chase");
    if (d < 1)
        throw DomainError("boundary_normalization_chase: the smooth fiber (d = 0) needs no chase");
    ExactSequenceSpec spec;
    spec.term("H^0(D)", 1)  // the cycle is connected
        .term("H^0(~D)", d)
        .term("H^0(nodes)", d)
        .term("H^1(D)")
        .term("H^1(~D)", 0)
        .term("H^1(nodes)", 0)
        .term("H^2(D)")
        .term("H^2(~D)", d)
        .term("H^2(nodes)", 0);
    spec.flag_injective(0);  // constants inject into the normalization
    return spec;
}

ExactSequenceSpec compact_support_chase(int d) {
    require_degree(d, "compact_support_chase");
    auto h_z = surface_cohomology();
    auto h_d = boundary_cohomology(d);
    ExactSequenceSpec spec;
    for (int i = 0; i <= 4; ++i) {
        std::string deg = std::to_string(i);
        spec.term("Hc^" + deg + "(Y)");
        spec.term("H^" + deg + "(Z)", h_z[static_cast<std::size_t>(i)]);
        spec.term("H^" + deg + "(D)", i <= 2 ? h_d[static_cast<std::size_t>(i)] : 0);
    }
    spec.flag_surjective(1);  // restriction of constants to the connected boundary
    if (restriction_surjective(d).surjective) spec.flag_surjective(7);
    return spec;
}

ExactSequenceSpec relative_cohomology_chase(int d) {
    require_degree(d, "relative_cohomology_chase");
    ChaseSolution hc = solve(compact_support_chase(d));
    if (hc.status != ChaseStatus::Solved)
        throw std::logic_error("compact support chase did not solve");
    // Poincare duality for the smooth open surface.
    std::array<std::int64_t, 5> h_y{};
    for (int i = 0; i <= 4; ++i)
        h_y[static_cast<std::size_t>(i)] = hc.dim("Hc^" + std::to_string(4 - i) + "(Y)");
    const std::array<std::int64_t, 5> h_fiber{1, 2, 1, 0, 0};  // smooth elliptic fiber

    ExactSequenceSpec spec;
    for (int i = 0; i <= 4; ++i) {
        std::string deg = std::to_string(i);
        spec.term("H^" + deg + "(Y,Yb)");
        spec.term("H^" + deg + "(Y)", h_y[static_cast<std::size_t>(i)]);
        spec.term("H^" + deg + "(Yb)", h_fiber[static_cast<std::size_t>(i)]);
    }
    spec.term("H^5(Y,Yb)");
    spec.flag_injective(1);   // constants restrict injectively to the fiber
    spec.flag_surjective(7);  // an ample class restricts onto H^2 of the fiber
    return spec;
}

MonodromyAssembly build_relative_monodromy(int d) {
    require_degree(d, "build_relative_monodromy");
    const std::size_t invariant_dim = static_cast<std::size_t>(10 - d);
    const std::size_t rel_dim = invariant_dim + 2;

    // Coordinates: invariant cycle classes a_1..a_{10-d}, then the two
    // lifted fiber 1-cycles.
    Matrix boundary(2, rel_dim);
    boundary(0, invariant_dim) = 1;
    boundary(1, invariant_dim + 1) = 1;

    Matrix fiber = Matrix::identity(2);
    if (d >= 1) fiber(0, 1) = d;  // rank-one unipotent twist of the d-cycle fiber

    Matrix ell(rel_dim, 2);
    ell(0, 0) = 1;
    if (d >= 1)
        ell(invariant_dim, 1) = d;
    else
        ell(1, 1) = 1;

    Matrix t_rel = Matrix::identity(rel_dim) + ell * boundary;

    if (rank(ell) != 2) throw std::logic_error("monodromy assembly: ell is not injective");
    if (!(boundary * ell == fiber - Matrix::identity(2)))
        throw std::logic_error("monodromy assembly: boundary . ell != fiber monodromy - id");
    Subspace fixed = kernel(t_rel - Matrix::identity(rel_dim));
    if (fixed.dim() != invariant_dim || !(fixed == kernel(boundary)))
        throw std::logic_error("monodromy assembly: fixed space is not the cycle-class block");

    return MonodromyAssembly{invariant_dim, ell, boundary, fiber, t_rel};
}

SurfaceModel build_surface_model(int d) {
    require_degree(d, "build_surface_model");
    SurfaceModel model;
    model.d = d;
    model.h_surface = surface_cohomology();
    model.h_boundary = boundary_cohomology(d);

    std::int64_t euler_check = 0;
    for (int i = 0; i <= 4; ++i)
        euler_check += (i % 2 == 0 ? 1 : -1) * model.h_surface[static_cast<std::size_t>(i)];
    if (euler_check != model.euler)
        throw std::logic_error("surface Euler characteristic is not 12");

    ChaseSolution hc = solve(compact_support_chase(d));
    if (hc.status != ChaseStatus::Solved)
        throw std::logic_error("compact support chase did not solve");
    for (int i = 0; i <= 4; ++i)
        model.hc_open[static_cast<std::size_t>(i)] = hc.dim("Hc^" + std::to_string(i) + "(Y)");
    for (int i = 0; i <= 4; ++i)
        model.h_open[static_cast<std::size_t>(i)] = model.hc_open[static_cast<std::size_t>(4 - i)];

    ChaseSolution rel = solve(relative_cohomology_chase(d));
    if (rel.status != ChaseStatus::Solved)
        throw std::logic_error("relative cohomology chase did not solve");
    for (int i = 0; i <= 4; ++i)
        model.h_rel[static_cast<std::size_t>(i)] = rel.dim("H^" + std::to_string(i) + "(Y,Yb)");
    if (rel.dim("H^5(Y,Yb)") != 0)
        throw std::logic_error("relative cohomology does not vanish in degree 5");
    for (int i = 0; i <= 4; ++i) {
        std::int64_t expected = i == 2 ? 12 - d : 0;
        if (model.h_rel[static_cast<std::size_t>(i)] != expected)
            throw std::logic_error("relative cohomology is not concentrated in degree 2");
    }

    MonodromyAssembly assembly = build_relative_monodromy(d);
    model.t_rel = assembly.t_rel;
    model.n_rel = unipotent_log(assembly.t_rel);
    model.fiber_monodromy = assembly.fiber_monodromy;
    if (model.t_rel.rows() != static_cast<std::size_t>(model.h_rel[2]))
        throw std::logic_error("monodromy dimension disagrees with the relative cohomology");
    return model;
}

bool fano_type(const SurfaceModel& model) {
    return !model.n_rel.pow(2).is_zero() && model.n_rel.pow(3).is_zero();
}

}  // namespace lgh
