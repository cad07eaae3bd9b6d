#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mbd/discrimination.hpp"
#include "mbd/errors.hpp"
#include "mbd/hstree.hpp"

namespace mbd {

struct SessionConfig {
    TreeMode mode = TreeMode::Inverse;
    std::size_t n = 9;
    Measure measure = Measure::Entropy;
    QueryOptions queries;
    std::optional<std::vector<double>> axiom_priors;  // defaults from axiom confidences
    TreeLimits tree_limits;
    ReasonerLimits reasoner_limits;
};

enum class Phase { Computing, AwaitingAnswer, Done };

const char* to_string(Phase p);

struct HistoryEntry {
    Query query;
    Answer answer = Answer::Yes;
    std::uint64_t step = 0;  // 1-based answer number
};

struct RankedDiagnosis {
    AxiomSet axioms;
    double probability = 0;
};

// The interactive loop: compute leading diagnoses, ask the best query, fold
// the answer into P or N, update the tree, repeat until no query separates
// the leading diagnoses and the tree yields no further one.
class Session {
public:
    Session(DiagnosisProblem problem, SessionConfig config, OracleFactory factory = default_oracle_factory());

    void submit_answer(Answer answer);

    Phase phase() const { return phase_; }
    const DiagnosisProblem& problem() const { return problem_; }
    const DiagnosisProblem& initial_problem() const { return initial_; }
    const SessionConfig& config() const { return config_; }
    const std::vector<AxiomSet>& leading() const { return leading_; }
    const std::vector<double>& probabilities() const { return probs_; }
    const std::optional<Query>& pending_query() const { return pending_; }
    const std::vector<HistoryEntry>& history() const { return history_; }
    const HSTree& tree() const { return tree_; }
    // False when a tree cap cut the last diagnosis search short.
    bool complete() const { return complete_; }

    // Final diagnoses by descending probability, then ascending ids.
    std::vector<RankedDiagnosis> result() const;

private:
    void advance();
    std::vector<double> posterior(const std::vector<AxiomSet>& diags);
    double log_likelihood(const AxiomSet& d);

    DiagnosisProblem initial_;
    DiagnosisProblem problem_;
    SessionConfig config_;
    OracleFactory factory_;
    std::unique_ptr<ReasonerOracle> oracle_;
    std::unique_ptr<RequirementChecker> checker_;
    HSTree tree_;
    std::vector<double> axiom_priors_;
    std::vector<Sentence> pool_;
    std::vector<AxiomSet> leading_;
    std::vector<double> probs_;
    std::optional<Query> pending_;
    std::vector<HistoryEntry> history_;
    std::vector<DiagnosisProblem> snapshots_;  // problem in force when each answer was given
    std::unique_ptr<ReasonerOracle> history_oracle_;
    std::unordered_map<AxiomSet, double, AxiomSetHash> likelihood_cache_;
    Phase phase_ = Phase::Computing;
    bool complete_ = true;
};

// Simulated user whose intended ontology is O \ target: answers yes iff
// (O \ target) ∪ B′ ⊨ Q, with B′ taken from the initial problem.
class ScriptedOracle {
public:
    ScriptedOracle(const DiagnosisProblem& problem, AxiomSet target,
                   const OracleFactory& factory = default_oracle_factory());
    Answer operator()(const Query& q);
    Answer operator()(const std::vector<Sentence>& sentences);

private:
    std::unique_ptr<ReasonerOracle> oracle_;
    std::vector<SentenceHandle> kb_;
};

// Runs a session to completion against a scripted oracle; returns the
// number of queries answered.
std::size_t run_scripted(Session& session, ScriptedOracle& oracle, std::size_t max_queries = 1000);

}  // namespace mbd
