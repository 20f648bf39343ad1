#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lgh {

/// Declarative description of a long exact sequence of finite-dimensional
/// spaces with partial data. The sequence is implicitly extended by zero
/// spaces at both ends, so the first map is injective and the last one
/// surjective by convention.
struct ArrowFlags {
    bool injective = false;
    bool surjective = false;
    bool zero = false;
};

struct SequenceTerm {
    std::string label;
    std::optional<std::int64_t> dim;
};

struct SequenceArrow {
    std::optional<std::int64_t> rank;
    ArrowFlags flags;
};

struct ExactSequenceSpec {
    std::vector<SequenceTerm> terms;
    std::vector<SequenceArrow> arrows;  // one per adjacent pair of terms

    ExactSequenceSpec& term(std::string label, std::optional<std::int64_t> dim = std::nullopt);
    ExactSequenceSpec& set_dim(const std::string& label, std::int64_t dim);
    ExactSequenceSpec& set_rank(std::size_t arrow, std::int64_t rank);
    ExactSequenceSpec& flag_injective(std::size_t arrow);
    ExactSequenceSpec& flag_surjective(std::size_t arrow);
    ExactSequenceSpec& flag_zero(std::size_t arrow);

    void validate() const;  // throws DomainError on structural problems
};

enum class ChaseStatus { Solved, Underdetermined, Inconsistent };

struct ChaseSolution {
    ChaseStatus status = ChaseStatus::Underdetermined;
    /// Forced values by term index / arrow index (framing zero arrows excluded).
    std::vector<std::optional<std::int64_t>> term_dims;
    std::vector<std::optional<std::int64_t>> arrow_ranks;
    std::vector<std::string> free_labels;  // Underdetermined: labels never forced
    std::string witness;                   // Inconsistent: first violated constraint

    /// Forced dimension by label; throws DomainError when not forced.
    std::int64_t dim(const std::string& label) const;
    std::map<std::string, std::int64_t> solved_dims() const;

private:
    friend ChaseSolution solve(const ExactSequenceSpec&);
    std::map<std::string, std::size_t> label_index_;
};

/// Fixpoint propagation over the exactness constraints
///   dim_i = rank_{i-1} + rank_i,  boundary ranks = 0,
///   injective => rank = source dim, surjective => rank = target dim,
///   zero => rank = 0.
/// Solved when every unknown is forced; Inconsistent carries the violated
/// constraint; Underdetermined lists the labels left free. Re-solving after
/// adding facts to the spec never changes an already-forced value.
ChaseSolution solve(const ExactSequenceSpec& spec);

/// True when the solution satisfies every constraint of the spec literally.
bool solution_satisfies(const ExactSequenceSpec& spec, const ChaseSolution& solution);

/// Alternating-sum check: exactness forces sum (-1)^i dim_i = 0. Requires
/// every dimension to be known.
bool euler_check(const ExactSequenceSpec& spec);

}  // namespace lgh
