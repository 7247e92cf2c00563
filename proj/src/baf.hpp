#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "framework.hpp"

namespace abaf {

using ArgId = std::uint32_t;

/// An argument (S, p): support S derives conclusion p.
struct CoreArgument {
    AssumptionSet support;
    Atom conclusion = kNoAtom;
    /// cl(S) in the framework.
    AssumptionSet support_closure;
};

/// Instantiated (premise-augmented) bipolar framework. The premise set of an
/// argument is its support.
class CoreBaf {
public:
    using Edge = std::pair<ArgId, ArgId>;

    CoreBaf() = default;
    /// `targets` lists the conclusions the construction was asked for; a
    /// credulous query must be among them. Edges are sorted and deduplicated.
    CoreBaf(std::size_t num_atoms, std::vector<CoreArgument> args, std::vector<Edge> attacks,
            std::vector<Edge> supports, std::vector<Atom> targets);

    std::size_t num_atoms() const { return num_atoms_; }
    std::size_t size() const { return args_.size(); }
    const std::vector<CoreArgument>& args() const { return args_; }
    const CoreArgument& arg(ArgId a) const { return args_[a]; }
    const std::vector<Edge>& attacks() const { return attacks_; }
    const std::vector<Edge>& supports() const { return supports_; }

    const std::vector<ArgId>& attackers_of(ArgId a) const { return attackers_[a]; }
    const std::vector<ArgId>& attacked_by(ArgId a) const { return attacked_[a]; }
    const std::vector<ArgId>& supported_by(ArgId a) const { return supported_[a]; }
    /// Smallest support-closed set containing `a`.
    const ArgSet& closure(ArgId a) const { return closure_[a]; }

    bool is_target(Atom p) const;
    const std::vector<Atom>& targets() const { return targets_; }
    std::vector<ArgId> concluding(Atom p) const;

    /// Union of the supports of the arguments in `e`.
    AssumptionSet assumptions_of(const ArgSet& e) const;
    /// {x | support(x) is a subset of s}.
    ArgSet lift(const AssumptionSet& s) const;
    ArgSet empty_set() const { return ArgSet(args_.size()); }

private:
    std::size_t num_atoms_ = 0;
    std::vector<CoreArgument> args_;
    std::vector<Edge> attacks_;
    std::vector<Edge> supports_;
    std::vector<Atom> targets_;
    std::vector<std::vector<ArgId>> attackers_;
    std::vector<std::vector<ArgId>> attacked_;
    std::vector<std::vector<ArgId>> supported_;
    std::vector<ArgSet> closure_;
};

}  // namespace abaf
