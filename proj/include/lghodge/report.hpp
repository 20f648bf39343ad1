#pragma once

#include "lghodge/hodge.hpp"
#include "lghodge/les.hpp"
#include "lghodge/matrix.hpp"
#include "lghodge/surface.hpp"

#include <string>

namespace lgh {

enum class OutputFormat { Json, Markdown, Plain };

std::string render_matrix(const Matrix& m, const std::string& indent = "");

/// Human-readable report for one degree; mirrors the row layout of the
/// cohomology tables (rows i = 0..4, one column per space).
std::string render_report_markdown(int d);
std::string render_report_plain(int d);

std::string render_surface_plain(const SurfaceModel& model);

/// label/dim table plus arrow ranks and the solver status.
std::string render_chase_solution(const ExactSequenceSpec& spec, const ChaseSolution& sol);

}  // namespace lgh
