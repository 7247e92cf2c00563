#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace abaf::sat {

enum class Result { Sat, Unsat };

/// Incremental CDCL solver with DIMACS-style literals: variable v >= 1,
/// literal +v / -v. Variables are created on first use.
///
/// Two-watched-literal propagation, first-UIP learning with recursive
/// minimisation, VSIDS, phase saving, Luby restarts and activity-based
/// learnt clause deletion. Assumptions are decided first, MiniSat style.
class Solver {
public:
    Solver();

    int new_var();
    int num_vars() const { return static_cast<int>(assigns_.size()); }
    std::size_t num_clauses() const { return num_original_; }

    /// Returns false when the clause set became trivially unsatisfiable.
    bool add_clause(std::span<const int> lits);
    bool add_clause(std::initializer_list<int> lits) { return add_clause(std::span<const int>(lits.begin(), lits.size())); }

    Result solve(std::span<const int> assumptions = {});
    Result solve(std::initializer_list<int> assumptions) {
        return solve(std::span<const int>(assumptions.begin(), assumptions.size()));
    }

    /// Value of a variable in the last model (Sat only).
    bool value(int var) const { return model_[static_cast<std::size_t>(var - 1)]; }
    bool lit_true(int lit) const { return lit > 0 ? value(lit) : !value(-lit); }

    std::uint64_t conflicts() const { return conflicts_; }
    std::uint64_t decisions() const { return decisions_; }

private:
    using Lit = std::uint32_t;  // 2*var + sign, var 0-based
    using CRef = std::uint32_t;
    static constexpr CRef kNoReason = ~CRef{0};

    struct Clause {
        std::vector<Lit> lits;
        double activity = 0;
        bool learnt = false;
        bool deleted = false;
    };
    struct Watcher {
        CRef cref;
        Lit blocker;
    };

    static Lit to_lit(int dimacs) {
        return dimacs > 0 ? static_cast<Lit>(2 * (dimacs - 1)) : static_cast<Lit>(2 * (-dimacs - 1) + 1);
    }
    static Lit neg(Lit l) { return l ^ 1u; }
    static std::uint32_t var(Lit l) { return l >> 1; }
    static bool sign(Lit l) { return l & 1u; }

    // 1 true, -1 false, 0 unassigned.
    int8_t lit_value(Lit l) const {
        int8_t v = assigns_[var(l)];
        return sign(l) ? static_cast<int8_t>(-v) : v;
    }
    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    void ensure_var(std::uint32_t v);
    CRef attach(std::vector<Lit> lits, bool learnt);
    void enqueue(Lit l, CRef reason);
    CRef propagate();
    void analyze(CRef confl, std::vector<Lit>& learnt, int& bt_level);
    bool lit_redundant(Lit l, std::uint32_t abstract_levels);
    void cancel_until(int level);
    Lit pick_branch();
    void bump_var(std::uint32_t v);
    void bump_clause(Clause& c);
    void reduce_db();

    // heap over variables ordered by activity
    void heap_insert(std::uint32_t v);
    void heap_up(std::size_t i);
    void heap_down(std::size_t i);
    std::uint32_t heap_pop();
    bool heap_contains(std::uint32_t v) const { return heap_pos_[v] >= 0; }

    bool ok_ = true;
    std::vector<Clause> clauses_;
    std::vector<CRef> learnts_;
    std::vector<CRef> free_slots_;
    std::vector<std::vector<Watcher>> watches_;
    std::vector<int8_t> assigns_;
    std::vector<int8_t> polarity_;
    std::vector<int> level_;
    std::vector<CRef> reason_;
    std::vector<double> activity_;
    std::vector<std::uint8_t> seen_;
    std::vector<Lit> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;
    std::vector<std::uint32_t> heap_;
    std::vector<std::int64_t> heap_pos_;
    std::vector<Lit> analyze_stack_;
    std::vector<Lit> analyze_toclear_;
    std::vector<bool> model_;

    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;
    double max_learnts_ = 0;
    std::size_t num_original_ = 0;
    std::uint64_t conflicts_ = 0;
    std::uint64_t decisions_ = 0;
};

}  // namespace abaf::sat
