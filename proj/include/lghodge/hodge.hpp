#pragma once

#include "lghodge/matrix.hpp"
#include "lghodge/surface.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace lgh {

enum class HodgeFamily {
    WeightGraded,   // from the monodromy weight filtration
    LogForms,       // from potential-adapted logarithmic forms
    Mirror,         // ordinary Hodge diamond of the mirror surface
    NodeConstraint, // admissible vanishing-cycle tables
};

/// A (p, q) -> nonnegative integer table with 0 <= p, q <= n.
struct HodgeTable {
    int n = 2;
    HodgeFamily family = HodgeFamily::WeightGraded;
    std::map<std::pair<int, int>, std::int64_t> entries;  // nonzero entries only

    std::int64_t at(int p, int q) const;
    void set(int p, int q, std::int64_t value);
    std::int64_t antidiagonal_sum(int m) const;  // sum over p + q = m
    bool symmetric() const;                      // invariant under (p,q) <-> (q,p)
    bool entrywise_equal(const HodgeTable& other) const;
};

/// Relative cohomology groups indexed by a = degree - n, each carrying the
/// nilpotent logarithm of its monodromy. Absent indices are zero groups.
struct GradedFamily {
    int n = 2;
    std::map<int, Matrix> log_by_offset;
};

/// Fano-type condition: on each nonzero group, N^{n-|a|} != 0 and
/// N^{n-|a|+1} = 0 (vacuous on zero groups).
bool fano_type(const GradedFamily& family);

/// The weight-graded Hodge numbers for a general graded family: the entry at
/// (p, q) reads the graded dimension 2(n-p) of the filtration centered at
/// n-a when a = p+q-n >= 0, and the graded dimension 2q of the filtration
/// centered at n+a when a < 0. Throws NotFanoTypeError when the family is
/// not of Fano type.
HodgeTable weight_graded_table(const GradedFamily& family);

/// The weight-graded table of a surface model (only a = 0 contributes).
HodgeTable h_table(const SurfaceModel& model);

/// Cohomology of the twisted logarithmic 1-forms, forced by the degenerate
/// spectral-sequence bookkeeping against the compactly supported cohomology
/// of the open part. Returns h^0, h^1, h^2.
std::array<std::int64_t, 3> log_one_forms_cohomology(const SurfaceModel& model);

/// The potential-adapted logarithmic Hodge numbers, assembled from the
/// structure-sheaf axioms, Serre duality, and the chase above.
HodgeTable f_table(const SurfaceModel& model);
HodgeTable f_table(int d);

/// Hodge diamond of the degree-d mirror surface (1 <= d <= 9): 1 at (0,0)
/// and (2,2), 10-d at (1,1). Throws NotDelPezzoError at d = 0.
HodgeTable x_hodge_table(int d);

enum class IObstruction { Holds, CounterexampleImpossibleToAvoid, NotApplicable };

/// Divisibility obstruction for the vanishing-cycle numbers: the model has
/// 12-d nodal fibers contributing identically, so every admissible table has
/// all entries divisible by 12-d while matching the antidiagonal sums of the
/// relative cohomology. The verdict records whether the weight-graded table
/// is among them.
struct IObstructionResult {
    int d = 0;
    IObstruction verdict = IObstruction::NotApplicable;
    std::int64_t divisor = 0;             // 12 - d
    std::vector<HodgeTable> admissible;   // all divisible tables with the right sums
    bool beyond_classical_case = false;   // the argument is classical only at d = 9
};

IObstructionResult i_obstruction(int d);

enum class CheckResult { Pass, Fail, NotApplicable };

struct ConjectureReport {
    int d = 0;
    std::array<CheckResult, 5> sum_identity_h{};  // per cohomological degree
    std::array<CheckResult, 5> sum_identity_f{};
    CheckResult f_equals_h = CheckResult::NotApplicable;
    CheckResult mirror_rotation = CheckResult::NotApplicable;  // f^{p,q} = x^{p,2-q}
    bool fano = false;
    IObstruction i_verdict = IObstruction::NotApplicable;

    bool all_applicable_pass() const;
};

/// Runs every check at degree d and aggregates the outcome; failures are
/// report contents, never exceptions.
ConjectureReport check_all(int d);

}  // namespace lgh
