#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "framework.hpp"

namespace abaf {

/// Conditions on a sought assumption set G. All listed conditions must hold.
struct AsmConstraintProblem {
    bool closed = false;
    bool conflict_free = false;
    /// Each atom must be in Th(G).
    std::vector<Atom> derives;
    /// G must attack each of these sets.
    std::vector<AssumptionSet> attacks;
    /// G is a subset of this set.
    std::optional<AssumptionSet> within;
    /// Every assumption outside G is attacked by G.
    bool out_defeated = false;
    /// Every assumption outside G is attacked by U(G), the set of assumptions
    /// G does not attack.
    bool out_attacked_by_undefeated = false;
    /// If U(G) is closed, U(G) attacks no member of G.
    bool undefeated_closed_guard = false;
    /// Excluded sets (exact match).
    std::vector<AssumptionSet> blocked;

    /// Direct check against a concrete set.
    bool satisfied_by(const Framework& fw, const AssumptionSet& g) const;
};

enum class SearchBackend { Sat, Backtracking };

/// Incremental search: find() returns a solution or nothing, block()
/// excludes one exact set from later answers.
class AsmSearch {
public:
    virtual ~AsmSearch() = default;
    virtual std::optional<AssumptionSet> find() = 0;
    virtual void block(const AssumptionSet& g) = 0;
};

std::unique_ptr<AsmSearch> make_asm_search(const Framework& fw, AsmConstraintProblem problem, SearchBackend backend);

std::optional<AssumptionSet> find_assumption_set(const Framework& fw, const AsmConstraintProblem& problem,
                                                 SearchBackend backend = SearchBackend::Sat);

}  // namespace abaf
