#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mbd::sat {

// Literals use the DIMACS convention at the API boundary: variables are
// 1-based, a negative value is the negated variable.
enum class Result { Sat, Unsat, Unknown };

// Conflict-driven clause-learning solver with assumption support.
//
// Clauses added at any time stay in the database; learned clauses are
// implied by the database, so they survive across solve() calls. Solving
// under assumptions never changes the clause set, which is what makes the
// solver usable as an incremental consistency oracle.
class Solver {
public:
    Solver();

    int new_var();
    int num_vars() const { return static_cast<int>(assigns_.size()); }
    std::size_t num_clauses() const { return num_original_; }
    std::size_t num_learnts() const { return clauses_.size() - num_original_; }

    // Returns false once the clause database is unsatisfiable at level 0.
    bool add_clause(std::span<const int> lits);
    bool add_clause(std::initializer_list<int> lits) {
        return add_clause(std::span<const int>(lits.begin(), lits.size()));
    }

    Result solve(std::span<const int> assumptions = {});

    // Value of a variable in the last model; only meaningful after Sat.
    bool model_value(int var) const;

    // Caps the number of conflicts per solve() call; <0 means unlimited.
    void set_conflict_budget(std::int64_t budget) { conflict_budget_ = budget; }

    std::uint64_t conflicts() const { return stats_conflicts_; }
    std::uint64_t decisions() const { return stats_decisions_; }
    std::uint64_t propagations() const { return stats_propagations_; }

private:
    using Lit = std::uint32_t;  // 2*var + sign, var 0-based
    static constexpr std::int8_t kUndef = 0;
    static constexpr std::int8_t kTrue = 1;
    static constexpr std::int8_t kFalse = -1;
    static constexpr int kNoReason = -1;

    struct Clause {
        std::vector<Lit> lits;
        bool learnt = false;
    };

    static Lit from_dimacs(int lit);
    static int var_of(Lit l) { return static_cast<int>(l >> 1); }
    static bool sign_of(Lit l) { return (l & 1u) != 0; }
    static Lit neg(Lit l) { return l ^ 1u; }

    std::int8_t value(Lit l) const {
        std::int8_t v = assigns_[var_of(l)];
        return sign_of(l) ? static_cast<std::int8_t>(-v) : v;
    }
    int level() const { return static_cast<int>(trail_lim_.size()); }

    void enqueue(Lit l, int reason);
    int propagate();  // returns conflicting clause index or kNoReason
    void analyze(int conflict, std::vector<Lit>& learnt, int& backtrack_level);
    bool literal_redundant(Lit l, std::uint32_t abstract_levels);
    void cancel_until(int lvl);
    Lit pick_branch();
    void attach(int ci);
    void bump(int var);
    void decay() { var_inc_ /= 0.95; }

    // binary max-heap over activity
    void heap_insert(int var);
    int heap_pop();
    void heap_up(int pos);
    void heap_down(int pos);
    bool heap_contains(int var) const {
        return var < static_cast<int>(heap_index_.size()) && heap_index_[var] >= 0;
    }

    static double luby(double y, int x);

    std::vector<Clause> clauses_;
    std::size_t num_original_ = 0;
    std::vector<std::vector<int>> watches_;  // indexed by literal
    std::vector<std::int8_t> assigns_;
    std::vector<std::int8_t> polarity_;
    std::vector<int> reason_;
    std::vector<int> levels_;
    std::vector<Lit> trail_;
    std::vector<int> trail_lim_;
    std::size_t qhead_ = 0;

    std::vector<double> activity_;
    double var_inc_ = 1.0;
    std::vector<int> heap_;
    std::vector<int> heap_index_;

    std::vector<std::int8_t> seen_;
    std::vector<Lit> analyze_stack_;
    std::vector<Lit> analyze_clear_;
    std::vector<bool> model_;

    bool ok_ = true;
    std::int64_t conflict_budget_ = -1;
    std::uint64_t stats_conflicts_ = 0;
    std::uint64_t stats_decisions_ = 0;
    std::uint64_t stats_propagations_ = 0;
};

}  // namespace mbd::sat
