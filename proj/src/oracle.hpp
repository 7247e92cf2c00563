#pragma once

#include <optional>
#include <vector>

#include "baf.hpp"
#include "framework.hpp"
#include "semantics.hpp"

/// Brute-force reference semantics. Everything here enumerates subsets
/// directly from the definitions and is meant for small inputs only.
namespace abaf::oracle {

inline constexpr std::size_t kMaxAssumptions = 20;
inline constexpr std::size_t kMaxArguments = 20;

/// All sigma-extensions of the framework, sorted. With `classic_preferred`,
/// PRF means subset-maximal admissible instead of subset-maximal complete.
/// Throws ResourceLimit when |A| > kMaxAssumptions.
std::vector<AssumptionSet> aba_extensions(const Framework& fw, Semantics sem, bool classic_preferred = false);

/// All sigma-extensions of the BAF, sorted. ADM (and classic PRF) also
/// require exhaustiveness w.r.t. premises. Throws ResourceLimit when the BAF
/// has more than kMaxArguments arguments.
std::vector<ArgSet> baf_extensions(const CoreBaf& baf, Semantics sem, bool classic_preferred = false);

/// Some sigma-extension E with query in Th(E), if any.
std::optional<AssumptionSet> aba_credulous_witness(const Framework& fw, Semantics sem, Atom query);
bool aba_credulous(const Framework& fw, Semantics sem, Atom query);

}  // namespace abaf::oracle
