#include "direct.hpp"

#include <string>

#include "errors.hpp"

namespace abaf {
namespace {

void check_query(const Framework& fw, Atom q) {
    if (q >= fw.num_atoms()) throw UsageError("unknown atom " + std::to_string(q + 1));
}

// Is there a closed G within `undefeated` that attacks `target`?
bool has_closed_attacker(const Framework& fw, const AssumptionSet& undefeated, AssumptionSet target,
                         SearchBackend backend) {
    AsmConstraintProblem p;
    p.closed = true;
    p.within = undefeated;
    p.attacks.push_back(std::move(target));
    return find_assumption_set(fw, p, backend).has_value();
}

DirectAnswer cegar(const Framework& fw, Atom query, const DirectOptions& opt, bool complete) {
    check_query(fw, query);
    AsmConstraintProblem abs;
    abs.closed = true;
    abs.conflict_free = true;
    abs.derives.push_back(query);
    abs.out_attacked_by_undefeated = opt.prune && complete;
    abs.undefeated_closed_guard = opt.prune;
    auto candidates = make_asm_search(fw, std::move(abs), opt.backend);

    DirectAnswer ans;
    while (auto c = candidates->find()) {
        ++ans.iterations;
        const AssumptionSet undefeated = fw.all_assumptions() - fw.defeated_by(fw.deduce(*c));

        bool ok = !has_closed_attacker(fw, undefeated, *c, opt.backend);
        if (ok && complete) {
            // an unattacked outsider with no closed attacker in U is defended
            const AssumptionSet outsiders = undefeated - *c;
            for (std::size_t a : outsiders.elements()) {
                AssumptionSet single = fw.empty_assumptions();
                single.set(a);
                if (!has_closed_attacker(fw, undefeated, std::move(single), opt.backend)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            ans.accepted = true;
            ans.witness = std::move(*c);
            return ans;
        }
        candidates->block(*c);
    }
    return ans;
}

}  // namespace

DirectAnswer cegar_com_credulous(const Framework& fw, Atom query, const DirectOptions& opt) {
    return cegar(fw, query, opt, true);
}

DirectAnswer cegar_adm_credulous(const Framework& fw, Atom query, const DirectOptions& opt) {
    return cegar(fw, query, opt, false);
}

DirectAnswer stable_credulous(const Framework& fw, Atom query, const DirectOptions& opt) {
    check_query(fw, query);
    AsmConstraintProblem p;
    p.closed = true;
    p.conflict_free = true;
    p.out_defeated = true;
    p.derives.push_back(query);
    DirectAnswer ans;
    ans.iterations = 1;
    if (auto s = find_assumption_set(fw, p, opt.backend)) {
        ans.accepted = true;
        ans.witness = std::move(*s);
    }
    return ans;
}

}  // namespace abaf
