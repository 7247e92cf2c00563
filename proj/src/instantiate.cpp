#include "instantiate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "derivation_cnf.hpp"
#include "errors.hpp"
#include "sat_solver.hpp"

namespace abaf {
namespace {

bool restricted_derives(Deducer& d, const AssumptionSet& s, Atom target) {
    return d.run(s, true).test(target);
}

AssumptionSet shrink(Deducer& d, AssumptionSet s, Atom target) {
    for (std::size_t a : s.elements()) {
        s.reset(a);
        if (!restricted_derives(d, s, target)) s.set(a);
    }
    return s;
}

std::vector<AssumptionSet> supports_sat(const Framework& fw, Atom target) {
    CnfFormula cnf;
    GateBuilder gates(cnf);
    std::vector<int> member(fw.num_atoms(), 0);
    for (Atom a : fw.assumptions()) member[a] = cnf.new_var();
    DerivationEncoding enc(fw, gates, member, true);
    cnf.add({enc.derived(target)});

    sat::Solver solver;
    std::vector<AssumptionSet> out;
    if (!cnf.load_into(solver)) return out;
    Deducer d(fw);
    while (solver.solve() == sat::Result::Sat) {
        AssumptionSet s = fw.empty_assumptions();
        for (Atom a : fw.assumptions())
            if (solver.value(member[a])) s.set(a);
        s = shrink(d, std::move(s), target);
        std::vector<int> block;
        s.for_each([&](std::size_t a) { block.push_back(-member[a]); });
        out.push_back(std::move(s));
        if (block.empty() || !solver.add_clause(block)) break;
    }
    return out;
}

class SupportBacktracker {
public:
    SupportBacktracker(const Framework& fw, Atom target) : fw_(fw), d_(fw), target_(target) {}

    std::vector<AssumptionSet> run() {
        for (;;) {
            AssumptionSet in = fw_.empty_assumptions();
            if (!search(0, in)) break;
            found_.push_back(shrink(d_, std::move(in), target_));
        }
        return std::move(found_);
    }

private:
    bool blocked(const AssumptionSet& in) const {
        return std::any_of(found_.begin(), found_.end(), [&](const auto& f) { return f.is_subset_of(in); });
    }

    // Out-first search for a set deriving the target that contains no
    // support found so far.
    bool search(std::size_t i, AssumptionSet& in) {
        if (blocked(in)) return false;
        AssumptionSet upper = in;
        for (std::size_t k = i; k < fw_.num_assumptions(); ++k) upper.set(fw_.assumptions()[k]);
        if (!restricted_derives(d_, upper, target_)) return false;
        if (i == fw_.num_assumptions()) return true;
        if (search(i + 1, in)) return true;
        Atom a = fw_.assumptions()[i];
        in.set(a);
        if (search(i + 1, in)) return true;
        in.reset(a);
        return false;
    }

    const Framework& fw_;
    Deducer d_;
    Atom target_;
    std::vector<AssumptionSet> found_;
};

struct ArgOrder {
    bool operator()(const CoreArgument& x, const CoreArgument& y) const {
        if (x.conclusion != y.conclusion) return x.conclusion < y.conclusion;
        return x.support < y.support;
    }
};

/// Sorts the arguments and derives attack and support edges.
CoreBaf assemble(const Framework& fw, std::vector<CoreArgument> args, std::vector<Atom> targets) {
    std::sort(args.begin(), args.end(), ArgOrder{});
    args.erase(std::unique(args.begin(), args.end(),
                           [](const CoreArgument& x, const CoreArgument& y) {
                               return x.conclusion == y.conclusion && x.support == y.support;
                           }),
               args.end());

    std::vector<std::vector<ArgId>> by_conclusion(fw.num_atoms());
    std::vector<ArgId> asm_arg(fw.num_atoms(), kNoAtom);
    for (ArgId x = 0; x < args.size(); ++x) {
        auto& arg = args[x];
        arg.support_closure = fw.closure(arg.support);
        by_conclusion[arg.conclusion].push_back(x);
        if (fw.is_assumption(arg.conclusion) && arg.support.count() == 1 && arg.support.test(arg.conclusion))
            asm_arg[arg.conclusion] = x;
    }

    std::vector<CoreBaf::Edge> attacks, supports;
    for (ArgId y = 0; y < args.size(); ++y) {
        args[y].support.for_each([&](std::size_t b) {
            for (ArgId x : by_conclusion[fw.contrary(static_cast<Atom>(b))]) attacks.emplace_back(x, y);
        });
    }
    for (ArgId x = 0; x < args.size(); ++x) {
        args[x].support_closure.for_each([&](std::size_t a) {
            ArgId y = asm_arg[a];
            if (y != kNoAtom && y != x) supports.emplace_back(x, y);
        });
    }
    return CoreBaf(fw.num_atoms(), std::move(args), std::move(attacks), std::move(supports), std::move(targets));
}

}  // namespace

std::vector<AssumptionSet> minimal_supports(const Framework& fw, Atom target, SupportSearch search) {
    if (target >= fw.num_atoms()) throw UsageError("unknown atom " + std::to_string(target + 1));
    auto out = search == SupportSearch::Sat ? supports_sat(fw, target) : SupportBacktracker(fw, target).run();
    std::sort(out.begin(), out.end());
    return out;
}

CoreBaf build_core(const Framework& fw, const std::vector<Atom>& query_atoms, SupportSearch search) {
    std::vector<Atom> targets;
    for (Atom a : fw.assumptions()) {
        targets.push_back(a);
        targets.push_back(fw.contrary(a));
    }
    for (Atom q : query_atoms) {
        if (q >= fw.num_atoms()) throw UsageError("unknown atom " + std::to_string(q + 1));
        targets.push_back(q);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    std::vector<CoreArgument> args;
    for (Atom t : targets) {
        for (auto& s : minimal_supports(fw, t, search)) args.push_back({std::move(s), t, {}});
        if (fw.is_assumption(t)) {
            AssumptionSet self = fw.empty_assumptions();
            self.set(t);
            args.push_back({std::move(self), t, {}});
        }
    }
    return assemble(fw, std::move(args), std::move(targets));
}

CoreBaf build_full_instantiation(const Framework& fw, std::size_t cap) {
    const std::size_t n = fw.num_assumptions();
    if (n >= 63) throw ResourceLimit("too many assumptions for a full instantiation");
    std::vector<CoreArgument> args;
    Deducer d(fw);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        AssumptionSet s = fw.empty_assumptions();
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1u) s.set(fw.assumptions()[i]);
        d.run(s).for_each([&](std::size_t p) {
            if (args.size() == cap)
                throw ResourceLimit("full instantiation exceeds " + std::to_string(cap) + " arguments");
            args.push_back({s, static_cast<Atom>(p), {}});
        });
    }
    std::vector<Atom> targets(fw.num_atoms());
    for (Atom p = 0; p < targets.size(); ++p) targets[p] = p;
    return assemble(fw, std::move(args), std::move(targets));
}

std::string to_baf_text(const CoreBaf& baf) {
    std::ostringstream out;
    out << "baf " << baf.size() << '\n';
    for (ArgId x = 0; x < baf.size(); ++x) {
        const auto& arg = baf.arg(x);
        out << "arg " << x + 1 << ' ' << arg.conclusion + 1;
        arg.support.for_each([&](std::size_t a) { out << ' ' << a + 1; });
        out << '\n';
    }
    for (auto [x, y] : baf.attacks()) out << "att " << x + 1 << ' ' << y + 1 << '\n';
    for (auto [x, y] : baf.supports()) out << "sup " << x + 1 << ' ' << y + 1 << '\n';
    return out.str();
}

}  // namespace abaf
