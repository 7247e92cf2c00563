#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "index_set.hpp"

namespace abaf {

/// Dense atom id, 0-based. ICCMA files number atoms from 1.
using Atom = std::uint32_t;
inline constexpr Atom kNoAtom = ~Atom{0};

struct Rule {
    Atom head = kNoAtom;
    /// Sorted, duplicate-free.
    std::vector<Atom> body;

    friend bool operator==(const Rule&, const Rule&) = default;
};

struct FragmentInfo {
    bool flat = false;
    bool atomic = false;
    bool additive = false;

    friend bool operator==(const FragmentInfo&, const FragmentInfo&) = default;
};

/// An ABA framework (L, R, A, contrary) over integer atoms.
///
/// Assumptions without a declared contrary receive a fresh sentinel atom that
/// heads no rule, so the contrary map is total and such assumptions can never
/// be attacked. Sentinels are appended after the declared atoms and are not
/// written back by the serializer.
class Framework {
public:
    struct Contrary {
        Atom assumption;
        Atom contrary;
    };

    /// Validates the input; throws UsageError on out-of-range ids, duplicate
    /// contrary declarations, contraries for non-assumptions or an empty A.
    Framework(std::size_t declared_atoms, std::vector<Rule> rules, std::vector<Atom> assumptions,
              const std::vector<Contrary>& contraries);

    std::size_t num_atoms() const { return is_assumption_.size(); }
    std::size_t declared_atoms() const { return declared_atoms_; }
    std::size_t num_assumptions() const { return assumptions_.size(); }

    std::span<const Rule> rules() const { return rules_; }
    /// Ascending.
    std::span<const Atom> assumptions() const { return assumptions_; }
    const AssumptionSet& all_assumptions() const { return assumption_set_; }

    bool is_assumption(Atom a) const { return a < num_atoms() && is_assumption_[a]; }
    Atom contrary(Atom assumption) const { return contrary_[assumption]; }
    bool has_declared_contrary(Atom assumption) const { return declared_contrary_[assumption]; }
    /// Position of an assumption within assumptions(); kNoAtom otherwise.
    std::uint32_t assumption_index(Atom a) const { return asm_index_[a]; }

    /// Assumptions whose contrary equals `atom`.
    std::span<const Atom> contrary_of(Atom atom) const { return contrary_of_[atom]; }
    /// Ids of rules with `atom` in the body.
    std::span<const std::uint32_t> rules_using(Atom atom) const { return occurs_[atom]; }
    /// Ids of rules with head `atom`.
    std::span<const std::uint32_t> rules_deriving(Atom atom) const { return heads_[atom]; }
    bool is_rule_head(Atom atom) const { return !heads_[atom].empty(); }

    std::optional<Atom> default_query() const { return default_query_; }
    void set_default_query(std::optional<Atom> q);

    AtomSet empty_atoms() const { return AtomSet(num_atoms()); }
    AssumptionSet empty_assumptions() const { return AssumptionSet(num_atoms()); }
    AssumptionSet assumption_set_of(std::span<const Atom> atoms) const;

    /// Th(S): least superset of S closed under the rules.
    AtomSet deduce(const AssumptionSet& s) const;
    /// Forward chaining where an assumption may feed a rule body only when it
    /// belongs to `s`; assumptions outside `s` can still be concluded.
    AtomSet restricted_deduce(const AssumptionSet& s) const;
    AssumptionSet closure(const AssumptionSet& s) const;
    bool is_closed(const AssumptionSet& s) const { return closure(s) == s; }
    bool attacks(const AssumptionSet& s, const AssumptionSet& t) const;
    /// Assumptions whose contrary lies in `derived`.
    AssumptionSet defeated_by(const AtomSet& derived) const;
    FragmentInfo classify() const;

    friend bool operator==(const Framework& a, const Framework& b);

private:
    std::size_t declared_atoms_;
    std::vector<Rule> rules_;
    std::vector<Atom> assumptions_;
    AssumptionSet assumption_set_;
    std::vector<bool> is_assumption_;
    std::vector<Atom> contrary_;
    std::vector<bool> declared_contrary_;
    std::vector<std::uint32_t> asm_index_;
    std::vector<std::vector<Atom>> contrary_of_;
    std::vector<std::vector<std::uint32_t>> occurs_;
    std::vector<std::vector<std::uint32_t>> heads_;
    std::optional<Atom> default_query_;
};

/// Reusable forward-chaining state; one per thread.
class Deducer {
public:
    explicit Deducer(const Framework& fw);

    const AtomSet& run(const AssumptionSet& s, bool restricted = false);
    const AtomSet& result() const { return derived_; }

private:
    const Framework& fw_;
    std::vector<std::uint32_t> missing_;
    std::vector<Atom> queue_;
    AtomSet derived_;
};

}  // namespace abaf
