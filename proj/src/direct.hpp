#pragma once

#include <cstdint>
#include <optional>

#include "asm_search.hpp"
#include "framework.hpp"

namespace abaf {

struct DirectOptions {
    /// Candidate-space prunings; answers do not depend on them.
    bool prune = true;
    SearchBackend backend = SearchBackend::Sat;
};

struct DirectAnswer {
    bool accepted = false;
    std::optional<AssumptionSet> witness;
    std::uint64_t iterations = 0;
};

/// Is `query` derivable from some complete assumption set?
DirectAnswer cegar_com_credulous(const Framework& fw, Atom query, const DirectOptions& opt = {});
/// Is `query` derivable from some admissible assumption set?
DirectAnswer cegar_adm_credulous(const Framework& fw, Atom query, const DirectOptions& opt = {});
/// Is `query` derivable from some stable assumption set?
DirectAnswer stable_credulous(const Framework& fw, Atom query, const DirectOptions& opt = {});

}  // namespace abaf
