#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "errors.hpp"

namespace abaf::oracle {
namespace {

using Mask = std::uint32_t;

/// Definitional evaluation over all subsets of an n-element universe, given
/// for each subset the elements it attacks and whether it is closed.
class SubsetSemantics {
public:
    SubsetSemantics(std::size_t n, std::vector<Mask> attacked, std::vector<std::uint8_t> closed)
        : n_(n), attacked_(std::move(attacked)), closed_(std::move(closed)) {
        const Mask full = all();
        // For every element, the subset-minimal closed sets attacking it. A set
        // attacking a closed attacker V also attacks every superset of V, so
        // checking the minimal ones is equivalent to checking all of them.
        min_attackers_.assign(n_, {});
        for (std::size_t e = 0; e < n_; ++e) {
            std::vector<Mask> all_attackers;
            for (Mask v = 0; v <= full; ++v) {
                if (closed_[v] && (attacked_[v] >> e & 1u)) all_attackers.push_back(v);
                if (v == full) break;
            }
            std::sort(all_attackers.begin(), all_attackers.end(),
                      [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
            auto& keep = min_attackers_[e];
            for (Mask v : all_attackers) {
                bool dominated = std::any_of(keep.begin(), keep.end(), [&](Mask k) { return (k & ~v) == 0; });
                if (!dominated) keep.push_back(v);
            }
        }
    }

    Mask all() const { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }

    bool defends(Mask s, std::size_t e) const {
        for (Mask v : min_attackers_[e])
            if ((attacked_[s] & v) == 0) return false;
        return true;
    }
    bool conflict_free(Mask s) const { return (attacked_[s] & s) == 0; }
    bool admissible(Mask s) const {
        if (!closed_[s] || !conflict_free(s)) return false;
        for (std::size_t e = 0; e < n_; ++e)
            if ((s >> e & 1u) && !defends(s, e)) return false;
        return true;
    }
    bool complete(Mask s) const {
        if (!admissible(s)) return false;
        for (std::size_t e = 0; e < n_; ++e)
            if (!(s >> e & 1u) && defends(s, e)) return false;
        return true;
    }
    bool stable(Mask s) const { return admissible(s) && (attacked_[s] | s) == all(); }

    std::vector<Mask> filter(const std::function<bool(Mask)>& pred) const {
        std::vector<Mask> out;
        for (Mask s = 0;; ++s) {
            if (pred(s)) out.push_back(s);
            if (s == all()) break;
        }
        return out;
    }

    static std::vector<Mask> maximal(const std::vector<Mask>& sets) {
        std::vector<Mask> out;
        for (Mask s : sets) {
            bool dominated = std::any_of(sets.begin(), sets.end(), [&](Mask t) { return t != s && (s & ~t) == 0; });
            if (!dominated) out.push_back(s);
        }
        return out;
    }

    /// `adm` is the admissibility test to use for ADM and classic PRF.
    std::vector<Mask> extensions(Semantics sem, bool classic_preferred, const std::function<bool(Mask)>& adm) const {
        switch (sem) {
            case Semantics::Adm: return filter(adm);
            case Semantics::Com: return filter([&](Mask s) { return complete(s); });
            case Semantics::Prf:
                if (classic_preferred) return maximal(filter(adm));
                return maximal(filter([&](Mask s) { return complete(s); }));
            case Semantics::Grd: {
                auto com = filter([&](Mask s) { return complete(s); });
                if (com.empty()) return {0};
                Mask meet = all();
                for (Mask s : com) meet &= s;
                return {meet};
            }
            case Semantics::Stb: return filter([&](Mask s) { return stable(s); });
        }
        return {};
    }

private:
    std::size_t n_;
    std::vector<Mask> attacked_;
    std::vector<std::uint8_t> closed_;
    std::vector<std::vector<Mask>> min_attackers_;
};

AssumptionSet to_assumptions(const Framework& fw, Mask m) {
    AssumptionSet s = fw.empty_assumptions();
    for (std::size_t i = 0; i < fw.num_assumptions(); ++i)
        if (m >> i & 1u) s.set(fw.assumptions()[i]);
    return s;
}

}  // namespace

std::vector<AssumptionSet> aba_extensions(const Framework& fw, Semantics sem, bool classic_preferred) {
    const std::size_t n = fw.num_assumptions();
    if (n > kMaxAssumptions)
        throw ResourceLimit("oracle supports at most " + std::to_string(kMaxAssumptions) + " assumptions, got " +
                            std::to_string(n));
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<Mask> attacked(subsets);
    std::vector<std::uint8_t> closed(subsets);
    Deducer deducer(fw);
    for (Mask m = 0; m < subsets; ++m) {
        const AtomSet& th = deducer.run(to_assumptions(fw, m));
        Mask att = 0, cl = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Atom a = fw.assumptions()[i];
            if (th.test(fw.contrary(a))) att |= Mask{1} << i;
            if (th.test(a)) cl |= Mask{1} << i;
        }
        attacked[m] = att;
        closed[m] = cl == m;
    }
    SubsetSemantics sys(n, std::move(attacked), std::move(closed));
    auto masks = sys.extensions(sem, classic_preferred, [&](Mask s) { return sys.admissible(s); });

    std::vector<AssumptionSet> out;
    for (Mask m : masks) out.push_back(to_assumptions(fw, m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ArgSet> baf_extensions(const CoreBaf& baf, Semantics sem, bool classic_preferred) {
    const std::size_t n = baf.size();
    if (n > kMaxArguments)
        throw ResourceLimit("oracle supports at most " + std::to_string(kMaxArguments) + " arguments, got " +
                            std::to_string(n));
    std::vector<Mask> att_out(n, 0), sup_out(n, 0);
    for (auto [x, y] : baf.attacks()) att_out[x] |= Mask{1} << y;
    for (auto [x, y] : baf.supports()) sup_out[x] |= Mask{1} << y;

    const std::size_t subsets = std::size_t{1} << n;
    std::vector<Mask> attacked(subsets, 0), needs(subsets, 0);
    std::vector<std::uint8_t> closed(subsets, 1);
    for (std::size_t m = 1; m < subsets; ++m) {
        auto low = static_cast<std::size_t>(std::countr_zero(m));
        std::size_t rest = m & (m - 1);
        attacked[m] = attacked[rest] | att_out[low];
        needs[m] = needs[rest] | sup_out[low];
        closed[m] = (needs[m] & ~static_cast<Mask>(m)) == 0;
    }

    // premise-exhaustiveness: prem(a) within prem(E) forces a into E
    auto exhaustive = [&](Mask s) {
        AssumptionSet prem(baf.num_atoms());
        for (std::size_t a = 0; a < n; ++a)
            if (s >> a & 1u) prem |= baf.arg(static_cast<ArgId>(a)).support;
        for (std::size_t a = 0; a < n; ++a)
            if (!(s >> a & 1u) && baf.arg(static_cast<ArgId>(a)).support.is_subset_of(prem)) return false;
        return true;
    };
    SubsetSemantics sys(n, std::move(attacked), std::move(closed));
    auto masks =
        sys.extensions(sem, classic_preferred, [&](Mask s) { return sys.admissible(s) && exhaustive(s); });

    std::vector<ArgSet> out;
    for (Mask m : masks) {
        ArgSet e(n);
        for (std::size_t a = 0; a < n; ++a)
            if (m >> a & 1u) e.set(a);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<AssumptionSet> aba_credulous_witness(const Framework& fw, Semantics sem, Atom query) {
    if (query >= fw.num_atoms()) throw UsageError("unknown atom " + std::to_string(query + 1));
    for (const auto& e : aba_extensions(fw, sem))
        if (fw.deduce(e).test(query)) return e;
    return std::nullopt;
}

bool aba_credulous(const Framework& fw, Semantics sem, Atom query) {
    return aba_credulous_witness(fw, sem, query).has_value();
}

}  // namespace abaf::oracle
