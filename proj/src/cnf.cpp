#include "cnf.hpp"

#include <ostream>

namespace abaf {

bool CnfFormula::load_into(sat::Solver& solver) const {
    while (solver.num_vars() < num_vars) solver.new_var();
    bool ok = true;
    for (const auto& c : clauses) ok = solver.add_clause(c) && ok;
    return ok;
}

void CnfFormula::write_dimacs(std::ostream& out) const {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
    for (const auto& c : clauses) {
        for (int l : c) out << l << ' ';
        out << "0\n";
    }
}

}  // namespace abaf
