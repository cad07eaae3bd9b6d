#include "mbd/sat.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mbd::sat {

Solver::Solver() = default;

Solver::Lit Solver::from_dimacs(int lit) {
    assert(lit != 0);
    int var = std::abs(lit) - 1;
    return static_cast<Lit>(var) * 2u + (lit < 0 ? 1u : 0u);
}

int Solver::new_var() {
    int v = num_vars();
    assigns_.push_back(kUndef);
    polarity_.push_back(kFalse);
    reason_.push_back(kNoReason);
    levels_.push_back(0);
    activity_.push_back(0.0);
    seen_.push_back(0);
    heap_index_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_insert(v);
    return v + 1;
}

void Solver::attach(int ci) {
    const Clause& c = clauses_[ci];
    watches_[c.lits[0]].push_back(ci);
    watches_[c.lits[1]].push_back(ci);
}

bool Solver::add_clause(std::span<const int> input) {
    if (!ok_) return false;
    assert(level() == 0);
    std::vector<Lit> lits;
    lits.reserve(input.size());
    for (int l : input) {
        if (l == 0 || std::abs(l) > num_vars()) {
            throw std::out_of_range("sat: literal refers to an undeclared variable");
        }
        lits.push_back(from_dimacs(l));
    }
    std::sort(lits.begin(), lits.end());
    std::vector<Lit> kept;
    Lit prev = ~0u;
    for (Lit l : lits) {
        if (l == prev) continue;
        if (prev != ~0u && l == neg(prev)) return true;  // tautology
        if (value(l) == kTrue) return true;
        if (value(l) == kFalse) {
            prev = l;
            continue;
        }
        kept.push_back(l);
        prev = l;
    }
    if (kept.empty()) {
        ok_ = false;
        return false;
    }
    if (kept.size() == 1) {
        enqueue(kept[0], kNoReason);
        if (propagate() != kNoReason) ok_ = false;
        return ok_;
    }
    clauses_.push_back(Clause{std::move(kept), false});
    ++num_original_;
    attach(static_cast<int>(clauses_.size() - 1));
    return true;
}

void Solver::enqueue(Lit l, int reason) {
    int v = var_of(l);
    assert(assigns_[v] == kUndef);
    assigns_[v] = sign_of(l) ? kFalse : kTrue;
    reason_[v] = reason;
    levels_[v] = level();
    trail_.push_back(l);
}

int Solver::propagate() {
    int conflict = kNoReason;
    while (qhead_ < trail_.size()) {
        Lit p = trail_[qhead_++];
        Lit false_lit = neg(p);
        ++stats_propagations_;
        std::vector<int>& ws = watches_[false_lit];
        std::size_t i = 0, j = 0;
        while (i < ws.size()) {
            int ci = ws[i++];
            std::vector<Lit>& c = clauses_[ci].lits;
            if (c[0] == false_lit) std::swap(c[0], c[1]);
            if (value(c[0]) == kTrue) {
                ws[j++] = ci;
                continue;
            }
            bool moved = false;
            for (std::size_t k = 2; k < c.size(); ++k) {
                if (value(c[k]) != kFalse) {
                    std::swap(c[1], c[k]);
                    watches_[c[1]].push_back(ci);
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            ws[j++] = ci;
            if (value(c[0]) == kFalse) {
                conflict = ci;
                qhead_ = trail_.size();
                while (i < ws.size()) ws[j++] = ws[i++];
            } else {
                enqueue(c[0], ci);
            }
        }
        ws.resize(j);
        if (conflict != kNoReason) break;
    }
    return conflict;
}

void Solver::bump(int var) {
    if ((activity_[var] += var_inc_) > 1e100) {
        for (double& a : activity_) a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_contains(var)) heap_up(heap_index_[var]);
}

bool Solver::literal_redundant(Lit l, std::uint32_t /*abstract_levels*/) {
    int r = reason_[var_of(l)];
    if (r == kNoReason) return false;
    const std::vector<Lit>& c = clauses_[r].lits;
    for (std::size_t k = 1; k < c.size(); ++k) {
        int v = var_of(c[k]);
        if (!seen_[v] && levels_[v] > 0) return false;
    }
    return true;
}

void Solver::analyze(int conflict, std::vector<Lit>& learnt, int& backtrack_level) {
    int path_count = 0;
    Lit p = ~0u;
    learnt.clear();
    learnt.push_back(0);
    std::size_t index = trail_.size();
    analyze_clear_.clear();

    do {
        assert(conflict != kNoReason);
        const std::vector<Lit>& c = clauses_[conflict].lits;
        for (std::size_t k = (p == ~0u ? 0 : 1); k < c.size(); ++k) {
            Lit q = c[k];
            int v = var_of(q);
            if (!seen_[v] && levels_[v] > 0) {
                bump(v);
                seen_[v] = 1;
                analyze_clear_.push_back(q);
                if (levels_[v] >= level()) {
                    ++path_count;
                } else {
                    learnt.push_back(q);
                }
            }
        }
        while (!seen_[var_of(trail_[--index])]) {
        }
        p = trail_[index];
        conflict = reason_[var_of(p)];
        seen_[var_of(p)] = 0;
        --path_count;
    } while (path_count > 0);
    learnt[0] = neg(p);

    // local minimization: drop literals implied by the rest of the clause
    std::size_t keep = 1;
    for (std::size_t k = 1; k < learnt.size(); ++k) {
        if (!literal_redundant(learnt[k], 0)) learnt[keep++] = learnt[k];
    }
    learnt.resize(keep);

    backtrack_level = 0;
    if (learnt.size() > 1) {
        std::size_t max_i = 1;
        for (std::size_t k = 2; k < learnt.size(); ++k) {
            if (levels_[var_of(learnt[k])] > levels_[var_of(learnt[max_i])]) max_i = k;
        }
        std::swap(learnt[1], learnt[max_i]);
        backtrack_level = levels_[var_of(learnt[1])];
    }
    for (Lit q : analyze_clear_) seen_[var_of(q)] = 0;
}

void Solver::cancel_until(int lvl) {
    if (level() <= lvl) return;
    for (std::size_t c = trail_.size(); c-- > static_cast<std::size_t>(trail_lim_[lvl]);) {
        int v = var_of(trail_[c]);
        assigns_[v] = kUndef;
        reason_[v] = kNoReason;
        polarity_[v] = sign_of(trail_[c]) ? kFalse : kTrue;
        if (!heap_contains(v)) heap_insert(v);
    }
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
    qhead_ = trail_.size();
}

Solver::Lit Solver::pick_branch() {
    while (!heap_.empty()) {
        int v = heap_pop();
        if (assigns_[v] == kUndef) {
            return static_cast<Lit>(v) * 2u + (polarity_[v] == kTrue ? 0u : 1u);
        }
    }
    return ~0u;
}

double Solver::luby(double y, int x) {
    int size = 1, seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        --seq;
        x = x % size;
    }
    return std::pow(y, seq);
}

Result Solver::solve(std::span<const int> assumptions) {
    model_.clear();
    if (!ok_) return Result::Unsat;

    std::vector<Lit> assume;
    assume.reserve(assumptions.size());
    for (int a : assumptions) {
        if (a == 0 || std::abs(a) > num_vars()) {
            throw std::out_of_range("sat: assumption refers to an undeclared variable");
        }
        assume.push_back(from_dimacs(a));
    }

    std::uint64_t conflicts_here = 0;
    int restart_index = 0;
    std::uint64_t restart_limit = static_cast<std::uint64_t>(luby(2.0, restart_index) * 100);
    std::uint64_t conflicts_since_restart = 0;
    std::vector<Lit> learnt;

    for (;;) {
        int conflict = propagate();
        if (conflict != kNoReason) {
            ++stats_conflicts_;
            ++conflicts_here;
            ++conflicts_since_restart;
            if (level() == 0) {
                ok_ = false;
                return Result::Unsat;
            }
            int bt = 0;
            analyze(conflict, learnt, bt);
            cancel_until(bt);
            if (learnt.size() == 1) {
                enqueue(learnt[0], kNoReason);
            } else {
                clauses_.push_back(Clause{learnt, true});
                int ci = static_cast<int>(clauses_.size() - 1);
                attach(ci);
                enqueue(learnt[0], ci);
            }
            decay();
            continue;
        }

        if (conflict_budget_ >= 0 && conflicts_here >= static_cast<std::uint64_t>(conflict_budget_)) {
            cancel_until(0);
            return Result::Unknown;
        }
        if (conflicts_since_restart >= restart_limit) {
            conflicts_since_restart = 0;
            restart_limit = static_cast<std::uint64_t>(luby(2.0, ++restart_index) * 100);
            cancel_until(0);
            continue;
        }

        Lit next = ~0u;
        while (level() < static_cast<int>(assume.size())) {
            Lit a = assume[level()];
            if (value(a) == kTrue) {
                trail_lim_.push_back(static_cast<int>(trail_.size()));
            } else if (value(a) == kFalse) {
                cancel_until(0);
                return Result::Unsat;
            } else {
                next = a;
                break;
            }
        }
        if (next == ~0u) {
            next = pick_branch();
            if (next == ~0u) {
                model_.assign(assigns_.size(), false);
                for (std::size_t v = 0; v < assigns_.size(); ++v) model_[v] = assigns_[v] == kTrue;
                cancel_until(0);
                return Result::Sat;
            }
        }
        ++stats_decisions_;
        trail_lim_.push_back(static_cast<int>(trail_.size()));
        enqueue(next, kNoReason);
    }
}

bool Solver::model_value(int var) const {
    if (var <= 0 || static_cast<std::size_t>(var) > model_.size()) return false;
    return model_[var - 1];
}

void Solver::heap_insert(int var) {
    heap_index_[var] = static_cast<int>(heap_.size());
    heap_.push_back(var);
    heap_up(heap_index_[var]);
}

int Solver::heap_pop() {
    int top = heap_[0];
    heap_[0] = heap_.back();
    heap_index_[heap_[0]] = 0;
    heap_.pop_back();
    heap_index_[top] = -1;
    if (!heap_.empty()) heap_down(0);
    return top;
}

void Solver::heap_up(int pos) {
    int var = heap_[pos];
    while (pos > 0) {
        int parent = (pos - 1) / 2;
        if (activity_[heap_[parent]] >= activity_[var]) break;
        heap_[pos] = heap_[parent];
        heap_index_[heap_[pos]] = pos;
        pos = parent;
    }
    heap_[pos] = var;
    heap_index_[var] = pos;
}

void Solver::heap_down(int pos) {
    int var = heap_[pos];
    int n = static_cast<int>(heap_.size());
    for (;;) {
        int child = 2 * pos + 1;
        if (child >= n) break;
        if (child + 1 < n && activity_[heap_[child + 1]] > activity_[heap_[child]]) ++child;
        if (activity_[heap_[child]] <= activity_[var]) break;
        heap_[pos] = heap_[child];
        heap_index_[heap_[pos]] = pos;
        pos = child;
    }
    heap_[pos] = var;
    heap_index_[var] = pos;
}

}  // namespace mbd::sat
