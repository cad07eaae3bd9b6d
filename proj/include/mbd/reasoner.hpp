#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mbd/sat.hpp"
#include "mbd/syntax.hpp"

namespace mbd {

// Opaque per-oracle identifier of an interned sentence.
using SentenceHandle = std::uint32_t;

struct Coherence {
    bool coherent = true;
    std::vector<std::string> unsatisfiable;  // sorted class names
};

// Consistency / entailment / coherency oracle.
//
// The entailment relation must be extensive, monotone and idempotent; every
// diagnosis algorithm in this library relies on monotonicity. Sentences are
// interned once and referred to by handle afterwards, so an implementation
// may prepare them (ground, compile, index) a single time.
//
// An oracle instance is single-threaded; use one per thread.
class ReasonerOracle {
public:
    virtual ~ReasonerOracle() = default;

    virtual SentenceHandle intern(const Sentence& s) = 0;

    // Each of the following is one decision query and bumps calls().
    virtual bool is_consistent(std::span<const SentenceHandle> kb) = 0;
    // kb ⊨ q1 ∧ ... ∧ qk
    virtual bool entails(std::span<const SentenceHandle> kb, std::span<const SentenceHandle> query) = 0;
    virtual Coherence coherence(std::span<const SentenceHandle> kb) = 0;

    // Indices into `pool` of the sentences entailed by kb, ascending.
    virtual std::vector<std::size_t> entailed_pool(std::span<const SentenceHandle> kb,
                                                   std::span<const SentenceHandle> pool);

    std::uint64_t calls() const { return calls_; }

protected:
    void count_call() { ++calls_; }

private:
    std::uint64_t calls_ = 0;
};

// Propositional image of a knowledge base under closed-domain grounding.
struct GroundTheory {
    std::map<std::string, int> atoms;  // "A(w)", "s(v,w)" -> variable
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<std::string> domain;
};

// Translates sentences into clauses over a fixed finite domain.
//
// Every sentence and every (concept, individual) pair gets a defining
// literal; compound formulas get an auxiliary variable with full
// equivalence clauses, so the encoding is linear in the formula size and the
// defining literal may be used under either polarity.
class Grounder {
public:
    struct Sink {
        virtual ~Sink() = default;
        virtual int new_var() = 0;
        virtual void add_clause(std::span<const int> lits) = 0;
    };

    Grounder(std::vector<std::string> domain, Sink& sink);

    // Literal equivalent to the sentence holding in the grounded theory.
    int sentence_literal(const Sentence& s);
    int concept_literal(const Concept& c, std::size_t individual);
    int atom(const std::string& key);

    const std::vector<std::string>& domain() const { return domain_; }
    const std::map<std::string, int>& atoms() const { return atoms_; }
    std::size_t individual_index(const std::string& name) const;

private:
    int true_literal();
    int conjunction(const std::vector<int>& lits);
    int disjunction(const std::vector<int>& lits);

    std::vector<std::string> domain_;
    std::unordered_map<std::string, std::size_t> index_;
    Sink& sink_;
    std::map<std::string, int> atoms_;
    std::unordered_map<std::string, int> concept_cache_;
    int true_lit_ = 0;
};

// Grounds kb over its named individuals plus `extra_individuals` and asserts
// every sentence.
GroundTheory ground(std::span<const Sentence> kb, const std::vector<std::string>& extra_individuals = {});

// Satisfiability of a ground theory. Throws ResourceLimit when the conflict
// budget (<0: unlimited) runs out before a verdict.
bool is_consistent(const GroundTheory& theory, std::int64_t conflict_budget = -1);

// DIMACS CNF: `p cnf V C` header, 1-based literals, 0-terminated clauses.
std::string to_dimacs(const GroundTheory& theory);

struct ReasonerLimits {
    std::int64_t conflict_budget = -1;  // per decision query; <0 unlimited
};

// The shipped oracle: closed-domain grounding over the named individuals plus
// one anonymous individual, decided by an incremental SAT solver. Sentences
// are grounded once on intern(); each query is a solve under assumptions.
class GroundingReasoner final : public ReasonerOracle {
public:
    static constexpr const char* kAnonymous = "_:anon";

    explicit GroundingReasoner(const std::set<std::string>& individuals, ReasonerLimits limits = {});

    SentenceHandle intern(const Sentence& s) override;
    bool is_consistent(std::span<const SentenceHandle> kb) override;
    bool entails(std::span<const SentenceHandle> kb, std::span<const SentenceHandle> query) override;
    Coherence coherence(std::span<const SentenceHandle> kb) override;

    const Sentence& sentence(SentenceHandle h) const { return sentences_[h]; }
    std::size_t solver_vars() const { return static_cast<std::size_t>(solver_.num_vars()); }

private:
    struct SolverSink final : Grounder::Sink {
        explicit SolverSink(sat::Solver& s) : solver(s) {}
        int new_var() override { return solver.new_var(); }
        void add_clause(std::span<const int> lits) override { solver.add_clause(lits); }
        sat::Solver& solver;
    };

    bool satisfiable(std::vector<int>& assumptions);
    int query_selector(std::span<const SentenceHandle> query);

    ReasonerLimits limits_;
    sat::Solver solver_;
    SolverSink sink_;
    Grounder grounder_;
    std::vector<Sentence> sentences_;
    std::vector<int> roots_;
    std::unordered_map<std::string, SentenceHandle> by_text_;
    std::map<std::vector<SentenceHandle>, int> query_selectors_;
    std::set<std::string> classes_;
};

// Oracle over the names of a knowledge-base signature.
std::unique_ptr<ReasonerOracle> make_grounding_reasoner(const Signature& sig, ReasonerLimits limits = {});

}  // namespace mbd
