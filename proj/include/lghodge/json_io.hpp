#pragma once

#include "lghodge/hodge.hpp"
#include "lghodge/les.hpp"
#include "lghodge/matrix.hpp"
#include "lghodge/nilpotent.hpp"
#include "lghodge/surface.hpp"

#include <json.hpp>

#include <string>

namespace lgh {

using json = nlohmann::json;  // key-sorted objects: byte-stable output

/// {"rows": r, "cols": c, "entries": [["p/q", ...], ...]} with rationals as
/// "p/q" or integer strings (plain JSON integers are accepted on input).
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);  // throws ParseError

json vector_to_json(const Vector& v);

/// {"center": m, "graded_dims": [...], "bases": [[...], ...]} where bases[k]
/// lists the canonical basis vectors of W_k.
json filtration_to_json(const WeightFiltration& w);

json profile_to_json(const NilpotentProfile& profile);

/// {"terms": [{"label": ..., "dim": n|null}, ...],
///  "arrows": [{"rank": n|null, "flags": [...]}, ...]}
json sequence_spec_to_json(const ExactSequenceSpec& spec);
ExactSequenceSpec sequence_spec_from_json(const json& j);  // throws ParseError

json chase_solution_to_json(const ExactSequenceSpec& spec, const ChaseSolution& sol);

json hodge_table_to_json(const HodgeTable& table);

json surface_model_to_json(const SurfaceModel& model);

/// One report record: {"d": n, "h": {...}|null, "f": {...}, "x": {...}|null,
/// "checks": {...}}.
json report_record_to_json(int d);

std::string check_result_name(CheckResult r);
std::string i_obstruction_name(IObstruction v);

}  // namespace lgh
