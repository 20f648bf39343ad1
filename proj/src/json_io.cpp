#include "lghodge/json_io.hpp"

#include "lghodge/errors.hpp"

#include <utility>

namespace lgh {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

namespace {

Rational entry_from_json(const json& e) {
    if (e.is_number_integer()) return Rational(e.get<long long>());
    if (e.is_string()) return parse_rational(e.get<std::string>());
    throw ParseError("matrix entries must be integers or 'p/q' strings");
}

}  // namespace

Matrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON needs 'rows', 'cols' and 'entries'");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw ParseError("matrix 'rows' and 'cols' must be nonnegative integers");
    std::size_t rows = j["rows"].get<std::size_t>();
    std::size_t cols = j["cols"].get<std::size_t>();
    const json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("matrix 'entries' must hold one array per row");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!entries[i].is_array() || entries[i].size() != cols)
            throw ParseError("matrix row " + std::to_string(i) + " has the wrong length");
        for (std::size_t j2 = 0; j2 < cols; ++j2) m(i, j2) = entry_from_json(entries[i][j2]);
    }
    return m;
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(format_rational(x));
    return out;
}

json filtration_to_json(const WeightFiltration& w) {
    json bases = json::array();
    for (const Subspace& s : w.subspaces) {
        json basis = json::array();
        for (std::size_t j = 0; j < s.dim(); ++j) basis.push_back(vector_to_json(s.basis_vector(j)));
        bases.push_back(std::move(basis));
    }
    return json{{"center", w.center}, {"graded_dims", w.graded_dims}, {"bases", bases}};
}

json profile_to_json(const NilpotentProfile& profile) {
    json chains = json::array();
    for (const auto& chain : profile.chains) {
        json c = json::array();
        for (const auto& v : chain) c.push_back(vector_to_json(v));
        chains.push_back(std::move(c));
    }
    return json{{"dim", profile.dim},
                {"power_ranks", profile.power_ranks},
                {"partition", profile.partition},
                {"chains", chains}};
}

json sequence_spec_to_json(const ExactSequenceSpec& spec) {
    json terms = json::array();
    for (const auto& t : spec.terms) {
        json jt{{"label", t.label}};
        jt["dim"] = t.dim ? json(*t.dim) : json(nullptr);
        terms.push_back(std::move(jt));
    }
    json arrows = json::array();
    for (const auto& a : spec.arrows) {
        json flags = json::array();
        if (a.flags.injective) flags.push_back("injective");
        if (a.flags.surjective) flags.push_back("surjective");
        if (a.flags.zero) flags.push_back("zero");
        json ja{{"flags", flags}};
        ja["rank"] = a.rank ? json(*a.rank) : json(nullptr);
        arrows.push_back(std::move(ja));
    }
    return json{{"terms", terms}, {"arrows", arrows}};
}

ExactSequenceSpec sequence_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.contains("arrows"))
        throw ParseError("sequence spec JSON needs 'terms' and 'arrows'");
    ExactSequenceSpec spec;
    for (const json& jt : j["terms"]) {
        if (!jt.is_object() || !jt.contains("label") || !jt["label"].is_string())
            throw ParseError("each term needs a string 'label'");
        SequenceTerm t;
        t.label = jt["label"].get<std::string>();
        if (jt.contains("dim") && !jt["dim"].is_null()) {
            if (!jt["dim"].is_number_integer()) throw ParseError("term 'dim' must be an integer");
            t.dim = jt["dim"].get<std::int64_t>();
        }
        spec.terms.push_back(std::move(t));
    }
    for (const json& ja : j["arrows"]) {
        if (!ja.is_object()) throw ParseError("each arrow must be an object");
        SequenceArrow a;
        if (ja.contains("rank") && !ja["rank"].is_null()) {
            if (!ja["rank"].is_number_integer()) throw ParseError("arrow 'rank' must be an integer");
            a.rank = ja["rank"].get<std::int64_t>();
        }
        if (ja.contains("flags")) {
            for (const json& f : ja["flags"]) {
                std::string name = f.get<std::string>();
                if (name == "injective")
                    a.flags.injective = true;
                else if (name == "surjective")
                    a.flags.surjective = true;
                else if (name == "zero")
                    a.flags.zero = true;
                else
                    throw ParseError("unknown arrow flag '" + name + "'");
            }
        }
        spec.arrows.push_back(std::move(a));
    }
    try {
        spec.validate();
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    return spec;
}

json chase_solution_to_json(const ExactSequenceSpec& spec, const ChaseSolution& sol) {
    json dims = json::object();
    for (std::size_t i = 0; i < spec.terms.size(); ++i)
        dims[spec.terms[i].label] = sol.term_dims[i] ? json(*sol.term_dims[i]) : json(nullptr);
    json ranks = json::array();
    for (const auto& r : sol.arrow_ranks) ranks.push_back(r ? json(*r) : json(nullptr));
    json out{{"dims", dims}, {"ranks", ranks}};
    switch (sol.status) {
        case ChaseStatus::Solved:
            out["status"] = "solved";
            break;
        case ChaseStatus::Underdetermined:
            out["status"] = "underdetermined";
            out["free"] = sol.free_labels;
            break;
        case ChaseStatus::Inconsistent:
            out["status"] = "inconsistent";
            out["witness"] = sol.witness;
            break;
    }
    return out;
}

json hodge_table_to_json(const HodgeTable& table) {
    json out = json::object();
    for (int p = 0; p <= table.n; ++p)
        for (int q = 0; q <= table.n; ++q)
            out[std::to_string(p) + "," + std::to_string(q)] = table.at(p, q);
    return out;
}

json surface_model_to_json(const SurfaceModel& model) {
    NilpotentProfile profile = jordan_profile(model.n_rel);
    return json{{"d", model.d},
                {"euler", model.euler},
                {"h_surface", model.h_surface},
                {"h_boundary", model.h_boundary},
                {"hc_open", model.hc_open},
                {"h_open", model.h_open},
                {"h_rel", model.h_rel},
                {"fiber_monodromy", matrix_to_json(model.fiber_monodromy)},
                {"t_rel", matrix_to_json(model.t_rel)},
                {"n_rel", matrix_to_json(model.n_rel)},
                {"jordan_partition", profile.partition},
                {"fano_type", fano_type(model)}};
}

std::string check_result_name(CheckResult r) {
    switch (r) {
        case CheckResult::Pass: return "pass";
        case CheckResult::Fail: return "fail";
        case CheckResult::NotApplicable: return "not_applicable";
    }
    return "?";
}

std::string i_obstruction_name(IObstruction v) {
    switch (v) {
        case IObstruction::Holds: return "holds";
        case IObstruction::CounterexampleImpossibleToAvoid:
            return "counterexample_impossible_to_avoid";
        case IObstruction::NotApplicable: return "not_applicable";
    }
    return "?";
}

json report_record_to_json(int d) {
    ConjectureReport report = check_all(d);
    SurfaceModel model = build_surface_model(d);
    json record;
    record["d"] = d;
    record["f"] = hodge_table_to_json(f_table(model));
    record["h"] = report.fano ? hodge_table_to_json(h_table(model)) : json(nullptr);
    record["x"] = d >= 1 ? hodge_table_to_json(x_hodge_table(d)) : json(nullptr);

    json checks;
    checks["fano_type"] = report.fano;
    checks["f_equals_h"] = check_result_name(report.f_equals_h);
    checks["mirror_rotation"] = check_result_name(report.mirror_rotation);
    json sums_h = json::array(), sums_f = json::array();
    for (int m = 0; m <= 4; ++m) {
        sums_h.push_back(check_result_name(report.sum_identity_h[static_cast<std::size_t>(m)]));
        sums_f.push_back(check_result_name(report.sum_identity_f[static_cast<std::size_t>(m)]));
    }
    checks["sum_identity_h"] = sums_h;
    checks["sum_identity_f"] = sums_f;

    IObstructionResult obstruction = i_obstruction(d);
    json i_check;
    i_check["verdict"] = i_obstruction_name(obstruction.verdict);
    if (obstruction.verdict != IObstruction::NotApplicable) {
        i_check["divisor"] = obstruction.divisor;
        json admissible = json::array();
        for (const auto& t : obstruction.admissible) admissible.push_back(hodge_table_to_json(t));
        i_check["admissible_tables"] = admissible;
        if (obstruction.beyond_classical_case)
            i_check["note"] = "divisibility argument applied beyond the classical case d = 9";
    }
    checks["i_obstruction"] = i_check;
    record["checks"] = checks;
    return record;
}

}  // namespace lgh
