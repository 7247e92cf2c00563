#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "sat_solver.hpp"

namespace abaf {

/// Plain clause list with DIMACS literals. Comment lines are emitted in the
/// DIMACS header and typically map variables back to domain objects.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<std::string> comments;

    int new_var() { return ++num_vars; }
    void add(std::vector<int> clause) { clauses.push_back(std::move(clause)); }
    void add(std::initializer_list<int> clause) { clauses.emplace_back(clause); }

    /// Creates the missing variables in `solver` and adds every clause.
    /// Returns false if the solver became unsatisfiable at level 0.
    bool load_into(sat::Solver& solver) const;
    void write_dimacs(std::ostream& out) const;
};

}  // namespace abaf
