#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "baf.hpp"
#include "framework.hpp"

namespace abaf {

enum class SupportSearch { Sat, Backtracking };

/// All subset-minimal S with target in restricted_deduce(S), sorted.
std::vector<AssumptionSet> minimal_supports(const Framework& fw, Atom target,
                                            SupportSearch search = SupportSearch::Sat);

/// Redundancy-free core over the conclusions A, contraries(A) and
/// `query_atoms`. Every assumption a keeps its argument ({a}, a).
CoreBaf build_core(const Framework& fw, const std::vector<Atom>& query_atoms = {},
                   SupportSearch search = SupportSearch::Sat);

/// Every pair (S, p) with p in Th(S). Throws ResourceLimit once more than
/// `cap` arguments would be produced.
CoreBaf build_full_instantiation(const Framework& fw, std::size_t cap);

/// Text form: `baf n`, `arg id concl s1..sk`, `att i j`, `sup i j`. Argument
/// ids and atoms are 1-based.
std::string to_baf_text(const CoreBaf& baf);

}  // namespace abaf
