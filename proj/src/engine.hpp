#pragma once

#include <optional>
#include <string>

#include "cnf.hpp"
#include "framework.hpp"
#include "semantics.hpp"

namespace abaf {

enum class Engine { Baf, Direct, Oracle };

std::string_view to_string(Engine e);
std::optional<Engine> parse_engine(std::string_view s);
/// BAF pipeline for everything except STB, which goes to the direct engine.
Engine default_engine(Semantics sem);

struct SolveOptions {
    std::optional<Engine> engine;
    /// Direct engine only.
    bool prune = true;
    /// BAF engine only: receives the solved formula.
    CnfFormula* dump = nullptr;
};

struct RunReport {
    Engine engine = Engine::Baf;
    bool accepted = false;
    std::optional<AssumptionSet> witness;
    /// Core size; zero unless the BAF engine ran.
    std::size_t n_args = 0;
    std::size_t n_att = 0;
    std::size_t n_sup = 0;
    double t_inst_ms = 0;
    double t_encode_ms = 0;
    double t_solve_ms = 0;
};

/// Credulous acceptance of `query` under `sem`. Throws UsageError for an
/// unknown atom or grounded on the direct engine.
RunReport solve_query(const Framework& fw, Semantics sem, Atom query, const SolveOptions& opt = {});

}  // namespace abaf
