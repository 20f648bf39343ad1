#include "lghodge/nilpotent.hpp"

#include "lghodge/errors.hpp"
#include "lghodge/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgh {

namespace {

// I, N, N^2, ... up to and including the first zero power. Throws when no
// power up to N^dim vanishes.
std::vector<Matrix> nilpotent_powers(const Matrix& n_op, const char* who) {
    if (!n_op.square()) throw DimensionError(std::string(who) + ": matrix must be square");
    const std::size_t dim = n_op.rows();
    std::vector<Matrix> powers{Matrix::identity(dim)};
    for (std::size_t k = 1; k <= dim; ++k) {
        powers.push_back(powers.back() * n_op);
        if (powers.back().is_zero()) return powers;
    }
    if (dim == 0) return powers;
    throw NotNilpotentError(std::string(who) + ": operator is not nilpotent (N^dim != 0)");
}

void verify_chains(const Matrix& n_op, const NilpotentProfile& profile) {
    std::vector<Vector> all;
    for (const auto& chain : profile.chains) {
        for (std::size_t j = 0; j < chain.size(); ++j) {
            Vector next = n_op.apply(chain[j]);
            if (j + 1 < chain.size()) {
                if (next != chain[j + 1]) throw std::logic_error("jordan chain broken");
            } else if (next != Vector(profile.dim, Rational(0))) {
                throw std::logic_error("jordan chain does not terminate in the kernel");
            }
            all.push_back(chain[j]);
        }
    }
    if (all.size() != profile.dim ||
        rank(Matrix::from_columns(profile.dim, all)) != profile.dim)
        throw std::logic_error("jordan chains do not form a basis");

    std::vector<std::size_t> from_chains;
    for (const auto& chain : profile.chains) from_chains.push_back(chain.size());
    std::sort(from_chains.rbegin(), from_chains.rend());
    if (from_chains != profile.partition)
        throw std::logic_error("chain lengths disagree with the rank partition");
}

}  // namespace

namespace detail {

NilpotentProfile jordan_profile_ordered(const Matrix& n_op, bool reverse_scan) {
    std::vector<Matrix> powers = nilpotent_powers(n_op, "jordan_profile");
    NilpotentProfile profile;
    profile.dim = n_op.rows();
    for (const Matrix& p : powers) profile.power_ranks.push_back(rank(p));

    const std::size_t index = powers.size() - 1;  // smallest k with N^k = 0
    auto rank_at = [&](std::size_t k) -> std::size_t {
        return k < profile.power_ranks.size() ? profile.power_ranks[k] : 0;
    };
    for (std::size_t s = index; s >= 1; --s) {
        std::size_t exactly_s = rank_at(s - 1) - 2 * rank_at(s) + rank_at(s + 1);
        for (std::size_t i = 0; i < exactly_s; ++i) profile.partition.push_back(s);
    }
    std::sort(profile.partition.rbegin(), profile.partition.rend());

    if (profile.dim == 0) return profile;

    // Bottoms of the chains: extend a basis of im(N^{s-1}) \cap ker N
    // downward through s = index..1, scanning canonical basis columns.
    Subspace ker_n = kernel(n_op);
    Subspace chosen(profile.dim);
    std::vector<std::pair<Vector, std::size_t>> bottoms;  // (vector, chain length)
    for (std::size_t s = index; s >= 1; --s) {
        Subspace level = intersection(image(powers[s - 1]), ker_n);
        for (std::size_t j = 0; j < level.dim(); ++j) {
            std::size_t col = reverse_scan ? level.dim() - 1 - j : j;
            Vector candidate = level.basis_vector(col);
            if (chosen.contains(candidate)) continue;
            bottoms.emplace_back(candidate, s);
            chosen = sum(chosen, Subspace::from_vectors(profile.dim, {candidate}));
        }
    }

    for (const auto& [bottom, s] : bottoms) {
        auto top = solve_particular(powers[s - 1], bottom);
        if (!top) throw std::logic_error("chain bottom not in the image of N^{s-1}");
        std::vector<Vector> chain{*top};
        for (std::size_t j = 1; j < s; ++j) chain.push_back(n_op.apply(chain.back()));
        profile.chains.push_back(std::move(chain));
    }
    std::stable_sort(profile.chains.begin(), profile.chains.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });

    verify_chains(n_op, profile);
    return profile;
}

WeightFiltration weight_filtration_ordered(const Matrix& n_op, std::size_t center,
                                           bool reverse_scan) {
    NilpotentProfile profile = jordan_profile_ordered(n_op, reverse_scan);
    if (profile.nilpotency_index() > center + 1)
        throw CenterTooSmallError("weight_filtration: N^{m+1} != 0 for m = " +
                                  std::to_string(center));

    WeightFiltration w;
    w.center = center;
    // Chain vector N^j v in a chain of length s carries weight m + (s-1) - 2j.
    std::vector<std::vector<Vector>> by_weight(2 * center + 1);
    for (const auto& chain : profile.chains) {
        const std::size_t s = chain.size();
        for (std::size_t j = 0; j < s; ++j) {
            std::size_t weight = center + (s - 1) - 2 * j;
            by_weight[weight].push_back(chain[j]);
        }
    }
    std::vector<Vector> accumulated;
    std::size_t prev_dim = 0;
    for (std::size_t k = 0; k <= 2 * center; ++k) {
        for (const auto& v : by_weight[k]) accumulated.push_back(v);
        w.subspaces.push_back(Subspace::from_vectors(profile.dim, accumulated));
        w.graded_dims.push_back(w.subspaces.back().dim() - prev_dim);
        prev_dim = w.subspaces.back().dim();
    }
    return w;
}

}  // namespace detail

NilpotentProfile jordan_profile(const Matrix& n_op) {
    return detail::jordan_profile_ordered(n_op, false);
}

Matrix unipotent_log(const Matrix& t) {
    if (!t.square()) throw DimensionError("unipotent_log: matrix must be square");
    const std::size_t dim = t.rows();
    Matrix u = t - Matrix::identity(dim);
    if (!u.pow(dim).is_zero())
        throw NotUnipotentError("unipotent_log: T - I is not nilpotent");
    Matrix acc(dim, dim);
    Matrix power = Matrix::identity(dim);
    for (std::size_t k = 1; k <= dim; ++k) {
        power = power * u;
        if (power.is_zero()) break;
        Rational coeff = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
        acc = acc + coeff * power;
    }
    return acc;
}

Matrix exp_nilpotent(const Matrix& n_op) {
    std::vector<Matrix> powers = nilpotent_powers(n_op, "exp_nilpotent");
    const std::size_t dim = n_op.rows();
    Matrix acc = Matrix::identity(dim);
    Rational factorial = 1;
    for (std::size_t k = 1; k < powers.size(); ++k) {
        factorial *= Rational(k);
        acc = acc + (Rational(1) / factorial) * powers[k];
    }
    return acc;
}

WeightFiltration weight_filtration(const Matrix& n_op, std::size_t center) {
    return detail::weight_filtration_ordered(n_op, center, false);
}

FiltrationAxiomReport verify_filtration_axioms(const Matrix& n_op, const WeightFiltration& w) {
    if (!n_op.square()) throw DimensionError("verify_filtration_axioms: matrix must be square");
    const std::size_t dim = n_op.rows();
    const std::size_t m = w.center;
    FiltrationAxiomReport report;

    if (w.subspaces.size() != 2 * m + 1 || w.graded_dims.size() != 2 * m + 1) {
        report.detail = "wrong number of filtration steps";
        return report;
    }
    for (const Subspace& s : w.subspaces)
        if (s.ambient_dim() != dim)
            throw DimensionError("verify_filtration_axioms: ambient dimension mismatch");

    report.well_formed = w.subspaces.back().dim() == dim;
    std::size_t prev = 0;
    for (std::size_t k = 0; k <= 2 * m; ++k) {
        if (k > 0 && !w.subspaces[k].contains(w.subspaces[k - 1])) report.well_formed = false;
        if (w.graded_dims[k] != w.subspaces[k].dim() - prev) report.well_formed = false;
        prev = w.subspaces[k].dim();
    }
    if (!report.well_formed) {
        report.detail = "filtration is not a nested chain exhausting the space";
        return report;
    }

    const Subspace zero(dim);
    auto step = [&](std::ptrdiff_t k) -> const Subspace& {
        return k < 0 ? zero : w.subspaces[static_cast<std::size_t>(k)];
    };

    report.shift_axiom = true;
    for (std::size_t i = 0; i <= 2 * m; ++i) {
        Subspace moved = apply(n_op, w.subspaces[i]);
        if (!step(static_cast<std::ptrdiff_t>(i) - 2).contains(moved)) {
            report.shift_axiom = false;
            report.detail = "N W_" + std::to_string(i) + " is not contained in W_" +
                            std::to_string(static_cast<std::ptrdiff_t>(i) - 2);
            break;
        }
    }

    report.graded_iso_axiom = true;
    for (std::size_t l = 1; l <= m && report.graded_iso_axiom; ++l) {
        if (w.graded_dims[m + l] != w.graded_dims[m - l]) {
            report.graded_iso_axiom = false;
            report.detail = "graded dimensions at " + std::to_string(m + l) + " and " +
                            std::to_string(m - l) + " differ";
            break;
        }
        Matrix n_l = n_op.pow(l);
        // Surjectivity of the induced map gr_{m+l} -> gr_{m-l}:
        const Subspace& below = step(static_cast<std::ptrdiff_t>(m - l) - 1);
        Subspace reached = sum(apply(n_l, w.subspaces[m + l]), below);
        if (!reached.contains(w.subspaces[m - l])) {
            report.graded_iso_axiom = false;
            report.detail = "N^" + std::to_string(l) + " is not surjective onto gr_" +
                            std::to_string(m - l);
            break;
        }
        // Injectivity: vectors of W_{m+l} mapped into W_{m-l-1} must already
        // lie in W_{m+l-1}.
        Subspace killed = intersection(w.subspaces[m + l], preimage(n_l, below));
        if (!(killed == w.subspaces[m + l - 1])) {
            report.graded_iso_axiom = false;
            report.detail = "N^" + std::to_string(l) + " is not injective on gr_" +
                            std::to_string(m + l);
            break;
        }
    }
    if (report.pass()) report.detail = "ok";
    return report;
}

}  // namespace lgh
