#include "lghodge/les.hpp"

#include "lghodge/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lgh {

namespace {

constexpr std::int64_t kDimBound = 1'000'000;  // terminates pathological specs

}  // namespace

ExactSequenceSpec& ExactSequenceSpec::term(std::string label, std::optional<std::int64_t> dim) {
    if (!terms.empty()) arrows.push_back({});
    terms.push_back({std::move(label), dim});
    return *this;
}

ExactSequenceSpec& ExactSequenceSpec::set_dim(const std::string& label, std::int64_t dim) {
    for (auto& t : terms) {
        if (t.label == label) {
            t.dim = dim;
            return *this;
        }
    }
    throw DomainError("set_dim: no term labelled '" + label + "'");
}

ExactSequenceSpec& ExactSequenceSpec::set_rank(std::size_t arrow, std::int64_t rank) {
    arrows.at(arrow).rank = rank;
    return *this;
}

ExactSequenceSpec& ExactSequenceSpec::flag_injective(std::size_t arrow) {
    arrows.at(arrow).flags.injective = true;
    return *this;
}

ExactSequenceSpec& ExactSequenceSpec::flag_surjective(std::size_t arrow) {
    arrows.at(arrow).flags.surjective = true;
    return *this;
}

ExactSequenceSpec& ExactSequenceSpec::flag_zero(std::size_t arrow) {
    arrows.at(arrow).flags.zero = true;
    return *this;
}

void ExactSequenceSpec::validate() const {
    if (terms.empty()) throw DomainError("sequence spec has no terms");
    if (arrows.size() + 1 != terms.size())
        throw DomainError("sequence spec needs exactly one arrow per adjacent pair of terms");
    std::set<std::string> seen;
    for (const auto& t : terms) {
        if (t.label.empty()) throw DomainError("sequence term with empty label");
        if (!seen.insert(t.label).second)
            throw DomainError("duplicate term label '" + t.label + "'");
        if (t.dim && (*t.dim < 0 || *t.dim > kDimBound))
            throw DomainError("dimension of '" + t.label + "' out of range");
    }
    for (const auto& a : arrows)
        if (a.rank && (*a.rank < 0 || *a.rank > kDimBound))
            throw DomainError("arrow rank out of range");
}

std::int64_t ChaseSolution::dim(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) throw DomainError("no term labelled '" + label + "'");
    if (!term_dims[it->second]) throw DomainError("dimension of '" + label + "' is not forced");
    return *term_dims[it->second];
}

std::map<std::string, std::int64_t> ChaseSolution::solved_dims() const {
    std::map<std::string, std::int64_t> out;
    for (const auto& [label, idx] : label_index_)
        if (term_dims[idx]) out[label] = *term_dims[idx];
    return out;
}

namespace {

struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = kDimBound;
    bool singleton() const { return lo == hi; }
    bool empty() const { return lo > hi; }
};

// Interval variables under a union-find: flags identify a rank with an
// adjacent dimension, which keeps the constraint network acyclic and the
// fixpoint exact.
class VarStore {
public:
    explicit VarStore(std::size_t n) : parent_(n), iv_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }

    // Returns false (inconsistency) when the merged interval is empty.
    bool merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return true;
        parent_[b] = a;
        iv_[a].lo = std::max(iv_[a].lo, iv_[b].lo);
        iv_[a].hi = std::min(iv_[a].hi, iv_[b].hi);
        changed_ = true;
        return !iv_[a].empty();
    }

    bool narrow_lo(std::size_t v, std::int64_t lo) {
        v = find(v);
        if (lo > iv_[v].lo) {
            iv_[v].lo = lo;
            changed_ = true;
        }
        return !iv_[v].empty();
    }

    bool narrow_hi(std::size_t v, std::int64_t hi) {
        v = find(v);
        if (hi < iv_[v].hi) {
            iv_[v].hi = hi;
            changed_ = true;
        }
        return !iv_[v].empty();
    }

    Interval get(std::size_t v) { return iv_[find(v)]; }
    bool take_changed() { return std::exchange(changed_, false); }

private:
    std::vector<std::size_t> parent_;
    std::vector<Interval> iv_;
    bool changed_ = false;
};

}  // namespace

ChaseSolution solve(const ExactSequenceSpec& spec) {
    spec.validate();
    const std::size_t n = spec.terms.size();
    const std::size_t n_arrows = spec.arrows.size();

    ChaseSolution sol;
    for (std::size_t i = 0; i < n; ++i) sol.label_index_[spec.terms[i].label] = i;

    // Variables: dims 0..n-1, interior arrow ranks n..n+n_arrows-1, and one
    // shared constant-zero variable for the two boundary ranks.
    const std::size_t zero_var = n + n_arrows;
    VarStore vars(n + n_arrows + 1);
    auto dim_var = [&](std::size_t i) { return i; };
    auto rank_var = [&](std::size_t j) { return n + j; };

    auto fail = [&](const std::string& witness) {
        sol.status = ChaseStatus::Inconsistent;
        sol.witness = witness;
        sol.term_dims.assign(n, std::nullopt);
        sol.arrow_ranks.assign(n_arrows, std::nullopt);
        return sol;
    };

    if (!vars.narrow_hi(zero_var, 0)) return fail("internal: zero variable");
    for (std::size_t i = 0; i < n; ++i) {
        if (!spec.terms[i].dim) continue;
        if (!vars.narrow_lo(dim_var(i), *spec.terms[i].dim) ||
            !vars.narrow_hi(dim_var(i), *spec.terms[i].dim))
            return fail("dimension of '" + spec.terms[i].label + "' inconsistent");
    }
    for (std::size_t j = 0; j < n_arrows; ++j) {
        const auto& a = spec.arrows[j];
        std::string where = "arrow " + spec.terms[j].label + " -> " + spec.terms[j + 1].label;
        if (a.rank && (!vars.narrow_lo(rank_var(j), *a.rank) || !vars.narrow_hi(rank_var(j), *a.rank)))
            return fail("rank of " + where + " inconsistent");
        if (a.flags.zero && !vars.narrow_hi(rank_var(j), 0))
            return fail(where + " flagged zero but has positive rank");
        if (a.flags.injective && !vars.merge(rank_var(j), dim_var(j)))
            return fail(where + " flagged injective: rank must equal the source dimension");
        if (a.flags.surjective && !vars.merge(rank_var(j), dim_var(j + 1)))
            return fail(where + " flagged surjective: rank must equal the target dimension");
    }

    // dim_i = rank_{i-1} + rank_i, with boundary ranks pinned to zero.
    vars.take_changed();
    bool active = true;
    while (active) {
        active = false;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t d = vars.find(dim_var(i));
            std::size_t l = vars.find(i == 0 ? zero_var : rank_var(i - 1));
            std::size_t r = vars.find(i + 1 == n ? zero_var : rank_var(i));
            std::string witness = "exactness at '" + spec.terms[i].label + "'";
            bool ok = true;
            if (d == l && d == r) {
                // x = x + x over nonnegative values
                ok = vars.narrow_hi(d, 0);
            } else if (d == l) {
                ok = vars.narrow_hi(r, 0);
            } else if (d == r) {
                ok = vars.narrow_hi(l, 0);
            } else if (l == r) {
                Interval di = vars.get(d), li = vars.get(l);
                ok = vars.narrow_lo(d, 2 * li.lo) && vars.narrow_hi(d, 2 * li.hi) &&
                     vars.narrow_lo(l, (di.lo + 1) / 2) && vars.narrow_hi(l, di.hi / 2);
                if (ok && vars.get(d).singleton() && vars.get(d).lo % 2 != 0) ok = false;
            } else {
                Interval di = vars.get(d), li = vars.get(l), ri = vars.get(r);
                ok = vars.narrow_lo(d, li.lo + ri.lo) && vars.narrow_hi(d, li.hi + ri.hi) &&
                     vars.narrow_lo(l, di.lo - ri.hi) && vars.narrow_hi(l, di.hi - ri.lo) &&
                     vars.narrow_lo(r, di.lo - li.hi) && vars.narrow_hi(r, di.hi - li.lo);
            }
            if (!ok) return fail(witness);
            if (vars.take_changed()) active = true;
        }
    }

    sol.term_dims.resize(n);
    sol.arrow_ranks.resize(n_arrows);
    bool all_forced = true;
    for (std::size_t i = 0; i < n; ++i) {
        Interval iv = vars.get(dim_var(i));
        if (iv.singleton())
            sol.term_dims[i] = iv.lo;
        else {
            all_forced = false;
            sol.free_labels.push_back(spec.terms[i].label);
        }
    }
    for (std::size_t j = 0; j < n_arrows; ++j) {
        Interval iv = vars.get(rank_var(j));
        if (iv.singleton())
            sol.arrow_ranks[j] = iv.lo;
        else
            all_forced = false;
    }
    sol.status = all_forced ? ChaseStatus::Solved : ChaseStatus::Underdetermined;
    if (sol.status == ChaseStatus::Solved && !solution_satisfies(spec, sol))
        throw std::logic_error("les solver produced a solution violating its constraints");
    return sol;
}

bool solution_satisfies(const ExactSequenceSpec& spec, const ChaseSolution& sol) {
    const std::size_t n = spec.terms.size();
    auto dim_at = [&](std::size_t i) { return sol.term_dims[i]; };
    auto rank_at = [&](std::size_t j) -> std::optional<std::int64_t> {
        return sol.arrow_ranks[j];
    };
    for (std::size_t i = 0; i < n; ++i) {
        auto d = dim_at(i);
        auto l = i == 0 ? std::optional<std::int64_t>(0) : rank_at(i - 1);
        auto r = i + 1 == n ? std::optional<std::int64_t>(0) : rank_at(i);
        if (d && (*d < 0)) return false;
        if (d && l && r && *d != *l + *r) return false;
        if (spec.terms[i].dim && d && *spec.terms[i].dim != *d) return false;
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        auto r = rank_at(j);
        if (!r) continue;
        if (*r < 0) return false;
        if (spec.arrows[j].rank && *spec.arrows[j].rank != *r) return false;
        if (spec.arrows[j].flags.zero && *r != 0) return false;
        if (spec.arrows[j].flags.injective && dim_at(j) && *r != *dim_at(j)) return false;
        if (spec.arrows[j].flags.surjective && dim_at(j + 1) && *r != *dim_at(j + 1)) return false;
    }
    return true;
}

bool euler_check(const ExactSequenceSpec& spec) {
    spec.validate();
    std::int64_t acc = 0;
    std::int64_t sign = 1;
    for (const auto& t : spec.terms) {
        if (!t.dim) throw DomainError("euler_check requires every dimension to be known");
        acc += sign * *t.dim;
        sign = -sign;
    }
    return acc == 0;
}

}  // namespace lgh
