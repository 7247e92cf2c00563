#include "framework.hpp"

#include <algorithm>

#include "errors.hpp"

namespace abaf {

Framework::Framework(std::size_t declared_atoms, std::vector<Rule> rules, std::vector<Atom> assumptions,
                     const std::vector<Contrary>& contraries)
    : declared_atoms_(declared_atoms), rules_(std::move(rules)), assumptions_(std::move(assumptions)) {
    auto check_atom = [&](Atom a, const char* what) {
        if (a >= declared_atoms_)
            throw UsageError(std::string(what) + " atom " + std::to_string(a + 1) + " out of range");
    };

    std::sort(assumptions_.begin(), assumptions_.end());
    assumptions_.erase(std::unique(assumptions_.begin(), assumptions_.end()), assumptions_.end());
    if (assumptions_.empty()) throw UsageError("framework has no assumptions");
    for (Atom a : assumptions_) check_atom(a, "assumption");
    for (auto& r : rules_) {
        check_atom(r.head, "rule head");
        for (Atom b : r.body) check_atom(b, "rule body");
        std::sort(r.body.begin(), r.body.end());
        r.body.erase(std::unique(r.body.begin(), r.body.end()), r.body.end());
    }

    std::vector<bool> is_asm(declared_atoms_, false);
    for (Atom a : assumptions_) is_asm[a] = true;
    std::vector<Atom> contrary(declared_atoms_, kNoAtom);
    for (const auto& c : contraries) {
        check_atom(c.assumption, "contrary");
        check_atom(c.contrary, "contrary");
        if (!is_asm[c.assumption])
            throw UsageError("contrary declared for non-assumption " + std::to_string(c.assumption + 1));
        if (contrary[c.assumption] != kNoAtom)
            throw UsageError("duplicate contrary for assumption " + std::to_string(c.assumption + 1));
        contrary[c.assumption] = c.contrary;
    }

    std::size_t total = declared_atoms_;
    declared_contrary_.assign(declared_atoms_, false);
    for (Atom a : assumptions_) {
        if (contrary[a] != kNoAtom) {
            declared_contrary_[a] = true;
        } else {
            contrary[a] = static_cast<Atom>(total++);
        }
    }
    contrary.resize(total, kNoAtom);
    declared_contrary_.resize(total, false);
    is_asm.resize(total, false);
    is_assumption_ = std::move(is_asm);
    contrary_ = std::move(contrary);

    assumption_set_ = AssumptionSet(total);
    asm_index_.assign(total, kNoAtom);
    contrary_of_.assign(total, {});
    for (std::uint32_t i = 0; i < assumptions_.size(); ++i) {
        Atom a = assumptions_[i];
        assumption_set_.set(a);
        asm_index_[a] = i;
        contrary_of_[contrary_[a]].push_back(a);
    }
    occurs_.assign(total, {});
    heads_.assign(total, {});
    for (std::uint32_t r = 0; r < rules_.size(); ++r) {
        heads_[rules_[r].head].push_back(r);
        for (Atom b : rules_[r].body) occurs_[b].push_back(r);
    }
}

void Framework::set_default_query(std::optional<Atom> q) {
    if (q && *q >= declared_atoms_) throw UsageError("query atom " + std::to_string(*q + 1) + " out of range");
    default_query_ = q;
}

AssumptionSet Framework::assumption_set_of(std::span<const Atom> atoms) const {
    AssumptionSet s = empty_assumptions();
    for (Atom a : atoms) {
        if (!is_assumption(a)) throw UsageError("atom " + std::to_string(a + 1) + " is not an assumption");
        s.set(a);
    }
    return s;
}

AtomSet Framework::deduce(const AssumptionSet& s) const {
    Deducer d(*this);
    return d.run(s);
}

AtomSet Framework::restricted_deduce(const AssumptionSet& s) const {
    Deducer d(*this);
    return d.run(s, true);
}

AssumptionSet Framework::closure(const AssumptionSet& s) const {
    return (deduce(s) & assumption_set_.as<AtomTag>()).as<AssumptionTag>();
}

bool Framework::attacks(const AssumptionSet& s, const AssumptionSet& t) const {
    if (t.empty()) return false;
    AtomSet th = deduce(s);
    bool hit = false;
    t.for_each([&](std::size_t b) { hit = hit || th.test(contrary_[b]); });
    return hit;
}

AssumptionSet Framework::defeated_by(const AtomSet& derived) const {
    AssumptionSet out = empty_assumptions();
    for (Atom a : assumptions_)
        if (derived.test(contrary_[a])) out.set(a);
    return out;
}

FragmentInfo Framework::classify() const {
    FragmentInfo info{true, true, true};
    for (const auto& r : rules_) {
        if (is_assumption_[r.head]) info.flat = false;
        if (r.body.size() > 1) info.additive = false;
        for (Atom b : r.body)
            if (!is_assumption_[b]) info.atomic = false;
    }
    return info;
}

bool operator==(const Framework& a, const Framework& b) {
    return a.declared_atoms_ == b.declared_atoms_ && a.rules_ == b.rules_ && a.assumptions_ == b.assumptions_ &&
           a.contrary_ == b.contrary_ && a.declared_contrary_ == b.declared_contrary_ &&
           a.default_query_ == b.default_query_;
}

Deducer::Deducer(const Framework& fw) : fw_(fw), derived_(fw.num_atoms()) {
    missing_.resize(fw.rules().size());
    queue_.reserve(fw.num_atoms());
}

const AtomSet& Deducer::run(const AssumptionSet& s, bool restricted) {
    derived_.clear();
    queue_.clear();
    auto derive = [&](Atom p) {
        if (!derived_.test(p)) {
            derived_.set(p);
            queue_.push_back(p);
        }
    };
    const auto rules = fw_.rules();
    for (std::size_t r = 0; r < rules.size(); ++r) {
        missing_[r] = static_cast<std::uint32_t>(rules[r].body.size());
        if (missing_[r] == 0) derive(rules[r].head);
    }
    s.for_each([&](std::size_t a) { derive(static_cast<Atom>(a)); });

    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
        Atom p = queue_[qi];
        if (restricted && fw_.is_assumption(p) && !s.test(p)) continue;
        for (std::uint32_t r : fw_.rules_using(p))
            if (--missing_[r] == 0) derive(rules[r].head);
    }
    return derived_;
}

}  // namespace abaf
