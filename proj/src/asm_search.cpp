#include "asm_search.hpp"

#include <algorithm>

#include "derivation_cnf.hpp"
#include "sat_solver.hpp"

namespace abaf {

bool AsmConstraintProblem::satisfied_by(const Framework& fw, const AssumptionSet& g) const {
    if (within && !g.is_subset_of(*within)) return false;
    if (std::find(blocked.begin(), blocked.end(), g) != blocked.end()) return false;
    const AtomSet th = fw.deduce(g);
    const AssumptionSet defeated = fw.defeated_by(th);
    if (closed && !fw.closure(g).is_subset_of(g)) return false;
    if (conflict_free && defeated.intersects(g)) return false;
    for (Atom p : derives)
        if (!th.test(p)) return false;
    for (const auto& t : attacks)
        if (!defeated.intersects(t)) return false;
    const AssumptionSet outside = fw.all_assumptions() - g;
    if (out_defeated && !outside.is_subset_of(defeated)) return false;
    if (out_attacked_by_undefeated || undefeated_closed_guard) {
        const AssumptionSet undefeated = fw.all_assumptions() - defeated;
        const AtomSet th_u = fw.deduce(undefeated);
        const AssumptionSet defeated_u = fw.defeated_by(th_u);
        if (out_attacked_by_undefeated && !outside.is_subset_of(defeated_u)) return false;
        if (undefeated_closed_guard && fw.closure(undefeated) == undefeated && defeated_u.intersects(g))
            return false;
    }
    return true;
}

namespace {

class SatSearch final : public AsmSearch {
public:
    SatSearch(const Framework& fw, const AsmConstraintProblem& p) : fw_(fw), member_(fw.num_atoms(), 0) {
        CnfFormula cnf;
        GateBuilder gates(cnf);
        for (Atom a : fw.assumptions()) member_[a] = cnf.new_var();
        DerivationEncoding th(fw, gates, member_);

        auto attacks_lit = [&](const DerivationEncoding& d, Atom a) { return d.derived(fw.contrary(a)); };

        for (Atom a : fw.assumptions()) {
            const int in = member_[a];
            if (p.within && !p.within->test(a)) cnf.add({-in});
            if (p.closed) cnf.add({-th.derived(a), in});
            if (p.conflict_free) cnf.add({-in, -attacks_lit(th, a)});
            if (p.out_defeated) cnf.add({in, attacks_lit(th, a)});
        }
        for (Atom q : p.derives) cnf.add({th.derived(q)});
        for (const auto& t : p.attacks) {
            std::vector<int> c;
            t.for_each([&](std::size_t a) { c.push_back(attacks_lit(th, static_cast<Atom>(a))); });
            cnf.add(std::move(c));
        }

        if (p.out_attacked_by_undefeated || p.undefeated_closed_guard) {
            std::vector<int> undefeated(fw.num_atoms(), 0);
            for (Atom a : fw.assumptions()) undefeated[a] = -attacks_lit(th, a);
            DerivationEncoding th_u(fw, gates, undefeated);
            if (p.out_attacked_by_undefeated)
                for (Atom a : fw.assumptions()) cnf.add({member_[a], attacks_lit(th_u, a)});
            if (p.undefeated_closed_guard) {
                std::vector<int> leaks;  // derived from U but not in U
                for (Atom a : fw.assumptions()) leaks.push_back(gates.and_of({th_u.derived(a), -undefeated[a]}));
                int u_closed = -gates.or_of(std::move(leaks));
                for (Atom a : fw.assumptions()) cnf.add({-u_closed, -member_[a], -attacks_lit(th_u, a)});
            }
        }
        ok_ = cnf.load_into(solver_);
        for (const auto& g : p.blocked) block(g);
    }

    std::optional<AssumptionSet> find() override {
        if (!ok_ || solver_.solve() == sat::Result::Unsat) return std::nullopt;
        AssumptionSet g = fw_.empty_assumptions();
        for (Atom a : fw_.assumptions())
            if (solver_.value(member_[a])) g.set(a);
        return g;
    }

    void block(const AssumptionSet& g) override {
        std::vector<int> c;
        for (Atom a : fw_.assumptions()) c.push_back(g.test(a) ? -member_[a] : member_[a]);
        ok_ = solver_.add_clause(c) && ok_;
    }

private:
    const Framework& fw_;
    std::vector<int> member_;
    sat::Solver solver_;
    bool ok_ = true;
};

/// Depth-first search over in/out decisions, "out" first. Monotone
/// conditions are checked on the partial assignment; the rest at leaves.
class BacktrackSearch final : public AsmSearch {
public:
    BacktrackSearch(const Framework& fw, AsmConstraintProblem p) : fw_(fw), p_(std::move(p)), deducer_(fw) {}

    std::optional<AssumptionSet> find() override {
        AssumptionSet in = fw_.empty_assumptions();
        AssumptionSet out = fw_.empty_assumptions();
        if (search(0, in, out)) return in;
        return std::nullopt;
    }

    void block(const AssumptionSet& g) override { p_.blocked.push_back(g); }

private:
    bool search(std::size_t i, AssumptionSet& in, AssumptionSet& out) {
        if (!feasible(i, in, out)) return false;
        if (i == fw_.num_assumptions()) return p_.satisfied_by(fw_, in);
        Atom a = fw_.assumptions()[i];
        out.set(a);
        if (search(i + 1, in, out)) return true;
        out.reset(a);
        if (p_.within && !p_.within->test(a)) return false;
        in.set(a);
        if (search(i + 1, in, out)) return true;
        in.reset(a);
        return false;
    }

    // Every condition below is monotone in the relevant direction, so a
    // failure rules out the whole subtree.
    bool feasible(std::size_t i, const AssumptionSet& in, const AssumptionSet& out) {
        const AssumptionSet lower = in;
        AssumptionSet upper = in;
        for (std::size_t k = i; k < fw_.num_assumptions(); ++k) upper.set(fw_.assumptions()[k]);

        const AtomSet th_low = deducer_.run(lower);
        const AssumptionSet def_low = fw_.defeated_by(th_low);
        if (p_.conflict_free && def_low.intersects(lower)) return false;
        if (p_.closed) {
            AssumptionSet derived = th_low.as<AssumptionTag>() & fw_.all_assumptions();
            if (derived.intersects(out)) return false;
        }

        const AtomSet th_up = deducer_.run(upper);
        for (Atom q : p_.derives)
            if (!th_up.test(q)) return false;
        const AssumptionSet def_up = fw_.defeated_by(th_up);
        for (const auto& t : p_.attacks)
            if (!def_up.intersects(t)) return false;
        if (p_.out_defeated && !out.is_subset_of(def_up)) return false;
        return true;
    }

    const Framework& fw_;
    AsmConstraintProblem p_;
    Deducer deducer_;
};

}  // namespace

std::unique_ptr<AsmSearch> make_asm_search(const Framework& fw, AsmConstraintProblem problem, SearchBackend backend) {
    if (backend == SearchBackend::Sat) return std::make_unique<SatSearch>(fw, problem);
    return std::make_unique<BacktrackSearch>(fw, std::move(problem));
}

std::optional<AssumptionSet> find_assumption_set(const Framework& fw, const AsmConstraintProblem& problem,
                                                 SearchBackend backend) {
    return make_asm_search(fw, problem, backend)->find();
}

}  // namespace abaf
