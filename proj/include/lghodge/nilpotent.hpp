#pragma once

#include "lghodge/matrix.hpp"
#include "lghodge/subspace.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lgh {

/// Jordan data of a nilpotent operator: ranks of its powers, the block-size
/// partition they determine, and an explicit Jordan chain basis.
struct NilpotentProfile {
    std::size_t dim = 0;
    std::vector<std::size_t> power_ranks;       // rank(N^k) for k = 0..nilpotency index
    std::vector<std::size_t> partition;         // block sizes, descending
    std::vector<std::vector<Vector>> chains;    // chains[i] = (v, Nv, ..., N^{s-1}v)

    std::size_t nilpotency_index() const { return power_ranks.size() - 1; }
};

/// Jordan analysis of a nilpotent matrix. Throws NotNilpotentError when
/// N^dim != 0. The chains are a genuine Jordan basis; blocks of size exactly
/// k are counted by r_{k-1} - 2 r_k + r_{k+1}, and the construction
/// re-verifies that both descriptions agree.
NilpotentProfile jordan_profile(const Matrix& n_op);

/// log of a unipotent matrix via the finite alternating series in T - I.
/// Throws NotUnipotentError when T - I is not nilpotent.
Matrix unipotent_log(const Matrix& t);

/// exp of a nilpotent matrix via the finite exponential series.
Matrix exp_nilpotent(const Matrix& n_op);

/// The increasing filtration W_0 <= ... <= W_{2m} = V attached to a
/// nilpotent operator, centered at m. It is the unique filtration with
///   (1) N W_i <= W_{i-2}, and
///   (2) N^l inducing isomorphisms gr_{m+l} -> gr_{m-l} for all l >= 0.
struct WeightFiltration {
    std::size_t center = 0;
    std::vector<Subspace> subspaces;        // W_0 .. W_{2m}
    std::vector<std::size_t> graded_dims;   // dim W_k - dim W_{k-1}

    const Subspace& at(std::size_t k) const { return subspaces[k]; }
};

/// Builds the weight filtration from a Jordan chain basis: the j-th vector
/// of a chain of length s spans weight m + (s-1) - 2j. Requires N^{m+1} = 0
/// (CenterTooSmallError otherwise).
WeightFiltration weight_filtration(const Matrix& n_op, std::size_t center);

/// Independent re-check of the two filtration axioms using only subspace
/// arithmetic, no chain data. Characterizes the filtration uniquely.
struct FiltrationAxiomReport {
    bool well_formed = false;   // nested chain ending in the full space, consistent graded dims
    bool shift_axiom = false;   // N W_i <= W_{i-2}
    bool graded_iso_axiom = false;
    std::string detail;

    bool pass() const { return well_formed && shift_axiom && graded_iso_axiom; }
};

FiltrationAxiomReport verify_filtration_axioms(const Matrix& n_op, const WeightFiltration& w);

namespace detail {

/// Chain construction with a selectable tie-break scan order over the
/// canonical bottom bases. Both orders produce valid Jordan bases; the
/// induced weight filtrations must coincide (uniqueness), which the test
/// suite exercises.
NilpotentProfile jordan_profile_ordered(const Matrix& n_op, bool reverse_scan);
WeightFiltration weight_filtration_ordered(const Matrix& n_op, std::size_t center,
                                           bool reverse_scan);

}  // namespace detail

}  // namespace lgh
