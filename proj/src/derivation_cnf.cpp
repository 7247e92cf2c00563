#include "derivation_cnf.hpp"

#include <algorithm>

namespace abaf {

GateBuilder::GateBuilder(CnfFormula& cnf) : cnf_(cnf), true_(cnf.new_var()) { cnf_.add({true_}); }

int GateBuilder::and_of(std::vector<int> lits) { return gate(std::move(lits)); }

// or(l1..ln) = -and(-l1..-ln); both share the and-memo.
int GateBuilder::or_of(std::vector<int> lits) {
    for (int& l : lits) l = -l;
    return -gate(std::move(lits));
}

int GateBuilder::gate(std::vector<int> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<int> kept;
    kept.reserve(lits.size());
    for (int l : lits) {
        if (l == true_) continue;
        if (l == -true_) return -true_;
        if (std::binary_search(lits.begin(), lits.end(), -l)) return -true_;
        kept.push_back(l);
    }
    if (kept.empty()) return true_;
    if (kept.size() == 1) return kept[0];

    auto [it, fresh] = and_memo_.try_emplace(kept, 0);
    if (!fresh) return it->second;
    int g = cnf_.new_var();
    it->second = g;
    std::vector<int> back{g};
    for (int l : kept) {
        cnf_.add({-g, l});
        back.push_back(-l);
    }
    cnf_.add(std::move(back));
    return g;
}

std::size_t DerivationEncoding::depth_bound(const Framework& fw, bool restricted) {
    std::size_t heads = 0;
    for (Atom p = 0; p < fw.num_atoms(); ++p)
        if (fw.is_rule_head(p) && !(restricted && fw.is_assumption(p))) ++heads;
    return heads;
}

DerivationEncoding::DerivationEncoding(const Framework& fw, GateBuilder& gates, const std::vector<int>& member,
                                       bool restricted) {
    const std::size_t n = fw.num_atoms();
    std::vector<int> base(n, gates.false_lit());
    for (Atom a : fw.assumptions()) base[a] = member[a];

    // Body literal of atom b under the previous layer.
    auto premise = [&](const std::vector<int>& prev, Atom b) {
        return restricted && fw.is_assumption(b) ? base[b] : prev[b];
    };

    std::vector<int> prev = base;
    std::vector<int> next(n);
    const std::size_t bound = depth_bound(fw, restricted);
    // Each productive round derives a new rule head, so `bound` rounds reach
    // the fixpoint; the extra round lets restricted mode read assumption
    // conclusions off the final layer.
    for (depth_ = 0; depth_ <= bound; ++depth_) {
        for (Atom p = 0; p < n; ++p) {
            auto rules = fw.rules_deriving(p);
            if (rules.empty()) {
                next[p] = base[p];
                continue;
            }
            std::vector<int> alts{base[p]};
            for (std::uint32_t r : rules) {
                std::vector<int> body;
                for (Atom b : fw.rules()[r].body) body.push_back(premise(prev, b));
                alts.push_back(gates.and_of(std::move(body)));
            }
            next[p] = gates.or_of(std::move(alts));
        }
        if (next == prev) break;
        prev.swap(next);
    }
    layer_ = std::move(prev);
}

}  // namespace abaf
