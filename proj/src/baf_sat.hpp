#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "baf.hpp"
#include "cnf.hpp"
#include "semantics.hpp"

namespace abaf {

/// Variables of a BAF encoding. `z[a]` is 0 when argument a attacks nobody,
/// `premise[p]` is 0 unless p is an assumption and the encoding is ADM.
struct VarMap {
    std::vector<int> x;
    std::vector<int> z;
    std::vector<int> premise;
};

struct BafEncoding {
    CnfFormula cnf;
    VarMap vars;
};

/// Clauses whose models, projected to the x variables, are the sigma
/// extensions of the core. PRF and GRD are encoded as COM.
BafEncoding encode_semantics(const CoreBaf& core, Semantics sem);

/// The credulous clause for `query`; empty when no argument concludes it.
/// Throws UsageError if `query` is not one of the core's target conclusions.
std::vector<int> encode_credulous_clause(const CoreBaf& core, const VarMap& vars, Atom query);

struct BafAnswer {
    bool accepted = false;
    /// Union of the supports of the arguments in the model.
    std::optional<AssumptionSet> witness;
    ArgSet extension;
};

/// Solves a formula produced by encode_semantics (plus any extra clauses).
BafAnswer solve_encoding(const CoreBaf& core, const BafEncoding& enc);

/// Credulous acceptance for ADM, COM, PRF (as COM) and STB. `encoded` (if
/// given) receives the formula that was solved, including the cred clause.
BafAnswer solve_credulous(const CoreBaf& core, Semantics sem, Atom query, CnfFormula* encoded = nullptr);

inline constexpr std::uint64_t kDefaultModelCap = 1'000'000;

/// Argument set of the grounded extension: the intersection of all complete
/// extensions, or empty when there are none. Throws ResourceLimit after
/// `model_cap` solver calls.
ArgSet grounded_extension(const CoreBaf& core, std::uint64_t model_cap = kDefaultModelCap);
/// Assumptions of grounded_extension().
AssumptionSet grounded_assumptions(const CoreBaf& core, std::uint64_t model_cap = kDefaultModelCap);

/// All sigma-extensions as argument sets, sorted; enumerates models with
/// blocking clauses. Throws ResourceLimit beyond `model_cap` models.
std::vector<ArgSet> enumerate_extensions(const CoreBaf& core, Semantics sem,
                                         std::uint64_t model_cap = kDefaultModelCap);

}  // namespace abaf
