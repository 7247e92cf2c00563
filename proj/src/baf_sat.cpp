#include "baf_sat.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"
#include "sat_solver.hpp"

namespace abaf {
namespace {

std::string support_text(const AssumptionSet& s) {
    std::string out;
    s.for_each([&](std::size_t a) { out += ' ' + std::to_string(a + 1); });
    return out;
}

ArgSet model_args(const CoreBaf& core, const VarMap& vars, const sat::Solver& solver) {
    ArgSet e = core.empty_set();
    for (ArgId a = 0; a < core.size(); ++a)
        if (solver.value(vars.x[a])) e.set(a);
    return e;
}

sat::Solver load(const CnfFormula& cnf, bool& ok) {
    sat::Solver solver;
    ok = cnf.load_into(solver);
    return solver;
}

}  // namespace

BafEncoding encode_semantics(const CoreBaf& core, Semantics sem) {
    if (sem == Semantics::Prf || sem == Semantics::Grd) sem = Semantics::Com;
    BafEncoding enc;
    auto& cnf = enc.cnf;
    auto& vm = enc.vars;
    const std::size_t n = core.size();

    vm.x.resize(n);
    for (ArgId a = 0; a < n; ++a) {
        vm.x[a] = cnf.new_var();
        const auto& arg = core.arg(a);
        cnf.comments.push_back("x " + std::to_string(vm.x[a]) + " arg " + std::to_string(a + 1) + " concl " +
                               std::to_string(arg.conclusion + 1) + " supp" + support_text(arg.support));
    }

    for (auto [a, b] : core.attacks()) cnf.add({-vm.x[a], -vm.x[b]});
    for (auto [a, b] : core.supports()) cnf.add({-vm.x[a], vm.x[b]});

    if (sem == Semantics::Stb) {
        for (ArgId a = 0; a < n; ++a) {
            std::vector<int> c{vm.x[a]};
            for (ArgId b : core.attackers_of(a)) c.push_back(vm.x[b]);
            cnf.add(std::move(c));
        }
        return enc;
    }

    // z_a <-> the extension attacks cl(a)
    vm.z.assign(n, 0);
    for (ArgId a = 0; a < n; ++a) {
        if (core.attacked_by(a).empty()) continue;
        int z = vm.z[a] = cnf.new_var();
        cnf.comments.push_back("z " + std::to_string(z) + " arg " + std::to_string(a + 1));
        std::vector<int> attackers;
        core.closure(a).for_each([&](std::size_t c) {
            for (ArgId d : core.attackers_of(static_cast<ArgId>(c))) attackers.push_back(vm.x[d]);
        });
        std::sort(attackers.begin(), attackers.end());
        attackers.erase(std::unique(attackers.begin(), attackers.end()), attackers.end());
        std::vector<int> def{-z};
        for (int x : attackers) {
            cnf.add({-x, z});
            def.push_back(x);
        }
        cnf.add(std::move(def));
    }

    for (auto [a, b] : core.attacks()) cnf.add({-vm.x[b], vm.z[a]});

    if (sem == Semantics::Com) {
        for (ArgId b = 0; b < n; ++b) {
            std::vector<int> c{vm.x[b]};
            for (ArgId a : core.attackers_of(b)) c.push_back(-vm.z[a]);
            cnf.add(std::move(c));
        }
        return enc;
    }

    // ADM: x_a <-> all premises of a are in
    vm.premise.assign(core.num_atoms(), 0);
    for (const auto& arg : core.args()) {
        arg.support.for_each([&](std::size_t p) {
            if (vm.premise[p] == 0) {
                vm.premise[p] = cnf.new_var();
                cnf.comments.push_back("a " + std::to_string(vm.premise[p]) + " assumption " + std::to_string(p + 1));
            }
        });
    }
    for (ArgId a = 0; a < n; ++a) {
        std::vector<int> back{vm.x[a]};
        core.arg(a).support.for_each([&](std::size_t p) {
            cnf.add({-vm.x[a], vm.premise[p]});
            back.push_back(-vm.premise[p]);
        });
        cnf.add(std::move(back));
    }
    return enc;
}

std::vector<int> encode_credulous_clause(const CoreBaf& core, const VarMap& vars, Atom query) {
    if (!core.is_target(query))
        throw UsageError("atom " + std::to_string(query + 1) + " is not a conclusion the core was built for");
    std::vector<int> clause;
    for (ArgId a : core.concluding(query)) clause.push_back(vars.x[a]);
    return clause;
}

BafAnswer solve_credulous(const CoreBaf& core, Semantics sem, Atom query, CnfFormula* encoded) {
    if (sem == Semantics::Grd) throw UsageError("grounded acceptance is not a single satisfiability check");
    BafEncoding enc = encode_semantics(core, sem);
    enc.cnf.add(encode_credulous_clause(core, enc.vars, query));
    if (encoded) *encoded = enc.cnf;

    return solve_encoding(core, enc);
}

BafAnswer solve_encoding(const CoreBaf& core, const BafEncoding& enc) {
    BafAnswer ans;
    ans.extension = core.empty_set();
    bool ok = false;
    sat::Solver solver = load(enc.cnf, ok);
    if (!ok || solver.solve() == sat::Result::Unsat) return ans;
    ans.accepted = true;
    ans.extension = model_args(core, enc.vars, solver);
    ans.witness = core.assumptions_of(ans.extension);
    return ans;
}

ArgSet grounded_extension(const CoreBaf& core, std::uint64_t model_cap) {
    BafEncoding enc = encode_semantics(core, Semantics::Com);
    bool ok = false;
    sat::Solver solver = load(enc.cnf, ok);
    if (!ok || solver.solve() == sat::Result::Unsat) return core.empty_set();
    ArgSet meet = model_args(core, enc.vars, solver);
    // Look for a complete extension missing some member of the running
    // intersection; each hit strictly shrinks it.
    for (std::uint64_t calls = 1; !meet.empty(); ++calls) {
        if (calls >= model_cap) throw ResourceLimit("grounded computation exceeded the model cap");
        int sel = solver.new_var();
        std::vector<int> c{-sel};
        meet.for_each([&](std::size_t a) { c.push_back(-enc.vars.x[a]); });
        solver.add_clause(c);
        if (solver.solve({sel}) == sat::Result::Unsat) break;
        meet &= model_args(core, enc.vars, solver);
        solver.add_clause({-sel});
    }
    return meet;
}

AssumptionSet grounded_assumptions(const CoreBaf& core, std::uint64_t model_cap) {
    return core.assumptions_of(grounded_extension(core, model_cap));
}

std::vector<ArgSet> enumerate_extensions(const CoreBaf& core, Semantics sem, std::uint64_t model_cap) {
    if (sem == Semantics::Grd) return {grounded_extension(core, model_cap)};
    BafEncoding enc = encode_semantics(core, sem);
    bool ok = false;
    sat::Solver solver = load(enc.cnf, ok);
    std::vector<ArgSet> out;
    while (ok && solver.solve() == sat::Result::Sat) {
        if (out.size() == model_cap) throw ResourceLimit("extension enumeration exceeded the model cap");
        ArgSet e = model_args(core, enc.vars, solver);
        std::vector<int> block;
        for (ArgId a = 0; a < core.size(); ++a) block.push_back(e.test(a) ? -enc.vars.x[a] : enc.vars.x[a]);
        out.push_back(std::move(e));
        ok = solver.add_clause(block);
    }
    if (sem == Semantics::Prf) {
        std::vector<ArgSet> maximal;
        for (const auto& e : out) {
            bool dominated = std::any_of(out.begin(), out.end(),
                                         [&](const ArgSet& f) { return !(f == e) && e.is_subset_of(f); });
            if (!dominated) maximal.push_back(e);
        }
        out = std::move(maximal);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace abaf
