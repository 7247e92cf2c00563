#include "sat_solver.hpp"

#include <algorithm>
#include <cstdlib>

namespace abaf::sat {
namespace {

constexpr double kVarDecay = 0.95;
constexpr double kClauseDecay = 0.999;
constexpr std::uint64_t kRestartBase = 100;

// Luby sequence 1,1,2,1,1,2,4,...
double luby(double y, int x) {
    int size = 1, seq = 0;
    while (size < x + 1) {
        seq++;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        seq--;
        x = x % size;
    }
    double r = 1;
    for (int i = 0; i < seq; ++i) r *= y;
    return r;
}

}  // namespace

Solver::Solver() = default;

int Solver::new_var() {
    ensure_var(static_cast<std::uint32_t>(assigns_.size()));
    return num_vars();
}

void Solver::ensure_var(std::uint32_t v) {
    while (assigns_.size() <= v) {
        auto nv = static_cast<std::uint32_t>(assigns_.size());
        assigns_.push_back(0);
        polarity_.push_back(1);
        level_.push_back(0);
        reason_.push_back(kNoReason);
        activity_.push_back(0);
        seen_.push_back(0);
        heap_pos_.push_back(-1);
        watches_.emplace_back();
        watches_.emplace_back();
        heap_insert(nv);
    }
}

bool Solver::add_clause(std::span<const int> dimacs) {
    if (!ok_) return false;
    std::vector<Lit> lits;
    lits.reserve(dimacs.size());
    for (int d : dimacs) {
        if (d == 0) std::abort();
        Lit l = to_lit(d);
        ensure_var(var(l));
        lits.push_back(l);
    }
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && lits[i + 1] == neg(lits[i])) return true;  // tautology
        int8_t v = lit_value(lits[i]);
        if (v == 1) return true;
        if (v == 0) kept.push_back(lits[i]);
    }
    ++num_original_;
    if (kept.empty()) return ok_ = false;
    if (kept.size() == 1) {
        enqueue(kept[0], kNoReason);
        if (propagate() != kNoReason) ok_ = false;
        return ok_;
    }
    attach(std::move(kept), false);
    return true;
}

Solver::CRef Solver::attach(std::vector<Lit> lits, bool learnt) {
    CRef cref;
    if (!free_slots_.empty()) {
        cref = free_slots_.back();
        free_slots_.pop_back();
        clauses_[cref] = Clause{};
    } else {
        cref = static_cast<CRef>(clauses_.size());
        clauses_.emplace_back();
    }
    Clause& c = clauses_[cref];
    c.lits = std::move(lits);
    c.learnt = learnt;
    watches_[c.lits[0]].push_back({cref, c.lits[1]});
    watches_[c.lits[1]].push_back({cref, c.lits[0]});
    if (learnt) learnts_.push_back(cref);
    return cref;
}

void Solver::enqueue(Lit l, CRef reason) {
    std::uint32_t v = var(l);
    assigns_[v] = sign(l) ? -1 : 1;
    level_[v] = decision_level();
    reason_[v] = reason;
    trail_.push_back(l);
}

// watches_[l] lists clauses watching literal l; they are visited when l becomes false.
Solver::CRef Solver::propagate() {
    CRef confl = kNoReason;
    while (qhead_ < trail_.size()) {
        Lit p = trail_[qhead_++];
        Lit false_lit = neg(p);
        auto& ws = watches_[false_lit];
        std::size_t i = 0, j = 0;
        while (i < ws.size()) {
            Watcher w = ws[i++];
            if (lit_value(w.blocker) == 1) {
                ws[j++] = w;
                continue;
            }
            Clause& c = clauses_[w.cref];
            auto& L = c.lits;
            if (L[0] == false_lit) std::swap(L[0], L[1]);
            Lit first = L[0];
            if (first != w.blocker && lit_value(first) == 1) {
                ws[j++] = {w.cref, first};
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < L.size(); ++k) {
                if (lit_value(L[k]) != -1) {
                    L[1] = L[k];
                    L[k] = false_lit;
                    watches_[L[1]].push_back({w.cref, first});
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            ws[j++] = {w.cref, first};
            if (lit_value(first) == -1) {
                confl = w.cref;
                qhead_ = trail_.size();
                while (i < ws.size()) ws[j++] = ws[i++];
            } else {
                enqueue(first, w.cref);
            }
        }
        ws.resize(j);
        if (confl != kNoReason) break;
    }
    return confl;
}

void Solver::analyze(CRef confl, std::vector<Lit>& learnt, int& bt_level) {
    int path = 0;
    Lit p = 0;
    bool have_p = false;
    learnt.clear();
    learnt.push_back(0);
    std::size_t index = trail_.size();

    do {
        Clause& c = clauses_[confl];
        if (c.learnt) bump_clause(c);
        for (std::size_t j = have_p ? 1 : 0; j < c.lits.size(); ++j) {
            Lit q = c.lits[j];
            std::uint32_t v = var(q);
            if (!seen_[v] && level_[v] > 0) {
                bump_var(v);
                seen_[v] = 1;
                if (level_[v] >= decision_level())
                    ++path;
                else
                    learnt.push_back(q);
            }
        }
        do {
            --index;
        } while (!seen_[var(trail_[index])]);
        p = trail_[index];
        have_p = true;
        confl = reason_[var(p)];
        seen_[var(p)] = 0;
        --path;
    } while (path > 0);
    learnt[0] = neg(p);

    // recursive minimisation
    analyze_toclear_.assign(learnt.begin(), learnt.end());
    std::uint32_t abstract_levels = 0;
    for (std::size_t k = 1; k < learnt.size(); ++k) abstract_levels |= 1u << (level_[var(learnt[k])] & 31);
    std::size_t keep = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
        if (reason_[var(learnt[k])] == kNoReason || !lit_redundant(learnt[k], abstract_levels))
            learnt[keep++] = learnt[k];
    }
    learnt.resize(keep);
    for (Lit l : analyze_toclear_) seen_[var(l)] = 0;

    bt_level = 0;
    if (learnt.size() > 1) {
        std::size_t max_i = 1;
        for (std::size_t k = 2; k < learnt.size(); ++k)
            if (level_[var(learnt[k])] > level_[var(learnt[max_i])]) max_i = k;
        std::swap(learnt[1], learnt[max_i]);
        bt_level = level_[var(learnt[1])];
    }
}

bool Solver::lit_redundant(Lit l, std::uint32_t abstract_levels) {
    analyze_stack_.clear();
    analyze_stack_.push_back(l);
    std::size_t top = analyze_toclear_.size();
    while (!analyze_stack_.empty()) {
        Lit cur = analyze_stack_.back();
        analyze_stack_.pop_back();
        const Clause& c = clauses_[reason_[var(cur)]];
        for (std::size_t i = 1; i < c.lits.size(); ++i) {
            Lit q = c.lits[i];
            std::uint32_t v = var(q);
            if (!seen_[v] && level_[v] > 0) {
                if (reason_[v] != kNoReason && ((1u << (level_[v] & 31)) & abstract_levels)) {
                    seen_[v] = 1;
                    analyze_stack_.push_back(q);
                    analyze_toclear_.push_back(q);
                } else {
                    for (std::size_t k = top; k < analyze_toclear_.size(); ++k) seen_[var(analyze_toclear_[k])] = 0;
                    analyze_toclear_.resize(top);
                    return false;
                }
            }
        }
    }
    return true;
}

void Solver::cancel_until(int level) {
    if (decision_level() <= level) return;
    for (std::size_t c = trail_.size(); c-- > static_cast<std::size_t>(trail_lim_[level]);) {
        std::uint32_t v = var(trail_[c]);
        assigns_[v] = 0;
        reason_[v] = kNoReason;
        polarity_[v] = sign(trail_[c]) ? 1 : 0;
        if (!heap_contains(v)) heap_insert(v);
    }
    qhead_ = static_cast<std::size_t>(trail_lim_[level]);
    trail_.resize(qhead_);
    trail_lim_.resize(static_cast<std::size_t>(level));
}

Solver::Lit Solver::pick_branch() {
    while (!heap_.empty()) {
        std::uint32_t v = heap_pop();
        if (assigns_[v] == 0) return 2 * v + (polarity_[v] ? 1u : 0u);
    }
    return ~Lit{0};
}

void Solver::bump_var(std::uint32_t v) {
    if ((activity_[v] += var_inc_) > 1e100) {
        for (auto& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_contains(v)) heap_up(static_cast<std::size_t>(heap_pos_[v]));
}

void Solver::bump_clause(Clause& c) {
    if ((c.activity += cla_inc_) > 1e20) {
        for (CRef r : learnts_) clauses_[r].activity *= 1e-20;
        cla_inc_ *= 1e-20;
    }
}

void Solver::reduce_db() {
    auto locked = [&](CRef r) {
        const Clause& c = clauses_[r];
        std::uint32_t v = var(c.lits[0]);
        return reason_[v] == r && lit_value(c.lits[0]) == 1;
    };
    std::sort(learnts_.begin(), learnts_.end(),
              [&](CRef a, CRef b) { return clauses_[a].activity < clauses_[b].activity; });
    std::vector<CRef> kept;
    std::size_t half = learnts_.size() / 2;
    for (std::size_t i = 0; i < learnts_.size(); ++i) {
        CRef r = learnts_[i];
        Clause& c = clauses_[r];
        if (i < half && c.lits.size() > 2 && !locked(r)) {
            c.deleted = true;
            std::vector<Lit>().swap(c.lits);
            free_slots_.push_back(r);
        } else {
            kept.push_back(r);
        }
    }
    learnts_ = std::move(kept);
    for (auto& ws : watches_) ws.clear();
    for (CRef r = 0; r < clauses_.size(); ++r) {
        const Clause& c = clauses_[r];
        if (c.deleted || c.lits.size() < 2) continue;
        watches_[c.lits[0]].push_back({r, c.lits[1]});
        watches_[c.lits[1]].push_back({r, c.lits[0]});
    }
}

Result Solver::solve(std::span<const int> assumptions) {
    model_.clear();
    if (!ok_) return Result::Unsat;
    std::vector<Lit> assumps;
    for (int d : assumptions) {
        Lit l = to_lit(d);
        ensure_var(var(l));
        assumps.push_back(l);
    }
    if (max_learnts_ == 0) max_learnts_ = std::max<double>(2000.0, static_cast<double>(num_original_) / 3.0);

    int restart_round = 0;
    std::uint64_t restart_limit = static_cast<std::uint64_t>(luby(2, restart_round) * kRestartBase);
    std::uint64_t since_restart = 0;
    std::vector<Lit> learnt;

    for (;;) {
        CRef confl = propagate();
        if (confl != kNoReason) {
            ++conflicts_;
            ++since_restart;
            if (decision_level() == 0) {
                ok_ = false;
                return Result::Unsat;
            }
            int bt = 0;
            analyze(confl, learnt, bt);
            cancel_until(bt);
            if (learnt.size() == 1) {
                enqueue(learnt[0], kNoReason);
            } else {
                CRef r = attach(learnt, true);
                bump_clause(clauses_[r]);
                enqueue(learnt[0], r);
            }
            var_inc_ /= kVarDecay;
            cla_inc_ /= kClauseDecay;
            continue;
        }

        if (since_restart >= restart_limit) {
            cancel_until(0);
            since_restart = 0;
            restart_limit = static_cast<std::uint64_t>(luby(2, ++restart_round) * kRestartBase);
            max_learnts_ *= 1.05;
        }
        if (static_cast<double>(learnts_.size()) >= max_learnts_ + static_cast<double>(trail_.size())) reduce_db();

        Lit next = ~Lit{0};
        while (static_cast<std::size_t>(decision_level()) < assumps.size()) {
            Lit a = assumps[static_cast<std::size_t>(decision_level())];
            int8_t v = lit_value(a);
            if (v == 1) {
                trail_lim_.push_back(static_cast<int>(trail_.size()));
            } else if (v == -1) {
                cancel_until(0);
                return Result::Unsat;
            } else {
                next = a;
                break;
            }
        }
        if (next == ~Lit{0}) {
            next = pick_branch();
            if (next == ~Lit{0}) {
                model_.resize(assigns_.size());
                for (std::size_t v = 0; v < assigns_.size(); ++v) model_[v] = assigns_[v] == 1;
                cancel_until(0);
                return Result::Sat;
            }
        }
        ++decisions_;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(next, kNoReason);
    }
}

void Solver::heap_insert(std::uint32_t v) {
    heap_pos_[v] = static_cast<std::int64_t>(heap_.size());
    heap_.push_back(v);
    heap_up(heap_.size() - 1);
}

void Solver::heap_up(std::size_t i) {
    std::uint32_t v = heap_[i];
    while (i > 0) {
        std::size_t parent = (i - 1) / 2;
        if (activity_[heap_[parent]] >= activity_[v]) break;
        heap_[i] = heap_[parent];
        heap_pos_[heap_[i]] = static_cast<std::int64_t>(i);
        i = parent;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<std::int64_t>(i);
}

void Solver::heap_down(std::size_t i) {
    std::uint32_t v = heap_[i];
    for (;;) {
        std::size_t child = 2 * i + 1;
        if (child >= heap_.size()) break;
        if (child + 1 < heap_.size() && activity_[heap_[child + 1]] > activity_[heap_[child]]) ++child;
        if (activity_[heap_[child]] <= activity_[v]) break;
        heap_[i] = heap_[child];
        heap_pos_[heap_[i]] = static_cast<std::int64_t>(i);
        i = child;
    }
    heap_[i] = v;
    heap_pos_[v] = static_cast<std::int64_t>(i);
}

std::uint32_t Solver::heap_pop() {
    std::uint32_t top = heap_.front();
    heap_pos_[top] = -1;
    std::uint32_t last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
        heap_[0] = last;
        heap_pos_[last] = 0;
        heap_down(0);
    }
    return top;
}

}  // namespace abaf::sat
