#pragma once

#include <map>
#include <vector>

#include "cnf.hpp"
#include "framework.hpp"

namespace abaf {

/// Tseitin gates with constant folding and structural hashing.
class GateBuilder {
public:
    explicit GateBuilder(CnfFormula& cnf);

    CnfFormula& cnf() { return cnf_; }
    int true_lit() const { return true_; }
    int false_lit() const { return -true_; }
    bool is_const(int lit) const { return lit == true_ || lit == -true_; }

    int and_of(std::vector<int> lits);
    int or_of(std::vector<int> lits);

private:
    int gate(std::vector<int> lits);

    CnfFormula& cnf_;
    int true_;
    std::map<std::vector<int>, int> and_memo_;
};

/// Encodes "atom p is derivable from the set G" where membership of
/// assumption a in G is given by a literal. Derivability is unfolded layer by
/// layer; layer k holds the atoms derivable within k rounds of rule
/// application. Unfolding stops once a layer repeats structurally or the
/// depth bound is reached, so the final layer is the exact least fixpoint.
///
/// In restricted mode an assumption feeds a rule body only through its
/// membership literal; derived assumptions are conclusions but never premises.
class DerivationEncoding {
public:
    /// `member[a]` is the literal for a ∈ G, indexed by atom id; entries for
    /// non-assumptions are ignored.
    DerivationEncoding(const Framework& fw, GateBuilder& gates, const std::vector<int>& member,
                       bool restricted = false);

    /// Literal equivalent to p being derived.
    int derived(Atom p) const { return layer_[p]; }
    std::size_t depth() const { return depth_; }

    /// Upper bound on the number of layers needed for a fixpoint.
    static std::size_t depth_bound(const Framework& fw, bool restricted);

private:
    std::vector<int> layer_;
    std::size_t depth_ = 0;
};

}  // namespace abaf
