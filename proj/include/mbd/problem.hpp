#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "mbd/axiom_set.hpp"
#include "mbd/model.hpp"
#include "mbd/reasoner.hpp"

namespace mbd {

// ⟨O, B, P, N⟩ plus the coherency flag. Immutable; copies share storage.
// Acquiring a test case produces a new problem with version() + 1.
class DiagnosisProblem {
public:
    DiagnosisProblem();

    const KnowledgeBase& ontology() const { return data_->ontology; }
    const KnowledgeBase& background() const { return data_->background; }
    const std::vector<TestCase>& positive() const { return data_->positive; }
    const std::vector<TestCase>& negative() const { return data_->negative; }
    bool require_coherency() const { return data_->require_coherency; }

    // B′ = B ∪ ⋃P, in order: background axioms, then positive test-case
    // sentences in acquisition order.
    const std::vector<Sentence>& background_prime() const { return data_->background_prime; }

    // All names of O, B, P and N.
    const Signature& signature() const { return data_->signature; }

    std::size_t size() const { return data_->ontology.size(); }
    std::size_t version() const { return data_->version; }

    AxiomSet no_axioms() const { return AxiomSet(size()); }
    AxiomSet all_axioms() const { return AxiomSet::full(size()); }

    // The same problem with one more test case; the polarity picks P or N.
    // Throws Error if the test case already occurs with the opposite polarity.
    DiagnosisProblem with_test_case(TestCase tc) const;

    // Same ontology and test cases with extra background sentences.
    DiagnosisProblem with_background(const std::vector<Sentence>& extra) const;

private:
    struct Data {
        KnowledgeBase ontology;
        KnowledgeBase background;
        std::vector<TestCase> positive;
        std::vector<TestCase> negative;
        bool require_coherency = false;
        std::vector<Sentence> background_prime;
        Signature signature;
        std::size_t version = 0;
    };

    explicit DiagnosisProblem(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    static std::shared_ptr<const Data> finish(Data d);

    std::shared_ptr<const Data> data_;

    friend DiagnosisProblem assemble_problem(KnowledgeBase, KnowledgeBase, std::vector<TestCase>,
                                             std::vector<TestCase>, bool);
};

// Creates a fresh oracle able to decide everything about a given problem.
using OracleFactory = std::function<std::unique_ptr<ReasonerOracle>(const DiagnosisProblem&)>;

// Default factory: a GroundingReasoner over the problem's individuals.
OracleFactory default_oracle_factory(ReasonerLimits limits = {});

// Assembles ⟨O, B, P, N⟩ without any reasoning; only structural checks
// (disjointness of O and B, no test case in both P and N).
DiagnosisProblem assemble_problem(KnowledgeBase ontology, KnowledgeBase background, std::vector<TestCase> positive,
                                  std::vector<TestCase> negative, bool require_coherency = false);

// Assembles and checks diagnosability: B′ consistent (coherent when
// flagged) and B′ ⊭ n for every n ∈ N. Throws NotDiagnosable otherwise.
DiagnosisProblem build_problem(KnowledgeBase ontology, KnowledgeBase background, std::vector<TestCase> positive,
                               std::vector<TestCase> negative, bool require_coherency, ReasonerOracle& oracle);
DiagnosisProblem build_problem(KnowledgeBase ontology, KnowledgeBase background, std::vector<TestCase> positive,
                               std::vector<TestCase> negative, bool require_coherency = false);

// B′ ∪ (O \ candidate) is consistent (coherent when flagged) and entails no
// negative test case. Handles refer to `oracle`.
bool verify_requirements(ReasonerOracle& oracle, std::span<const SentenceHandle> background_prime,
                         const AxiomSet& candidate, std::span<const SentenceHandle> ontology,
                         std::span<const std::vector<SentenceHandle>> negatives, bool require_coherency);

// Evaluates the requirement predicate for subsets of O against one problem
// version. holds(S) ⇔ B′ ∪ S is consistent (coherent when flagged) and
// entails no n ∈ N. Every diagnosis and conflict check reduces to it:
//   D is a diagnosis    ⇔ holds(O \ D)
//   CS is a conflict    ⇔ ¬holds(CS)
// Verdicts are memoized by axiom subset; a checker is bound to a single
// problem version, so acquiring a test case means a new checker.
class RequirementChecker {
public:
    RequirementChecker(DiagnosisProblem problem, ReasonerOracle& oracle);

    bool holds(const AxiomSet& active);
    // holds() for B′ ∪ active ∪ extra; not memoized.
    bool holds_with(const AxiomSet& active, std::span<const SentenceHandle> extra);

    bool background_holds() { return holds(problem_.no_axioms()); }
    bool is_valid_diagnosis(const AxiomSet& d) { return holds(d.complement()); }
    bool is_conflict(const AxiomSet& cs) { return !holds(cs); }

    // B′ ∪ active as oracle handles.
    std::vector<SentenceHandle> kb(const AxiomSet& active) const;
    SentenceHandle axiom_handle(AxiomId id) const { return ontology_[id]; }
    SentenceHandle intern(const Sentence& s) { return oracle_.intern(s); }

    const DiagnosisProblem& problem() const { return problem_; }
    ReasonerOracle& oracle() { return oracle_; }

    void set_memoize(bool on) { memoize_ = on; }

    // holds() invocations, including memo hits.
    std::uint64_t requests() const { return requests_; }
    // holds() invocations that reached the oracle.
    std::uint64_t evaluations() const { return evaluations_; }

private:
    bool evaluate(std::vector<SentenceHandle>& kb);

    DiagnosisProblem problem_;
    ReasonerOracle& oracle_;
    std::vector<SentenceHandle> background_;
    std::vector<SentenceHandle> ontology_;
    std::vector<std::vector<SentenceHandle>> negatives_;
    std::unordered_map<AxiomSet, bool, AxiomSetHash> memo_;
    bool memoize_ = true;
    std::uint64_t requests_ = 0;
    std::uint64_t evaluations_ = 0;
};

// Diagnosis per the requirements above.
bool is_valid_diagnosis(RequirementChecker& checker, const AxiomSet& candidate);
// Valid and no single element can be dropped. Single-element checks suffice
// because validity is upward closed under a monotone entailment relation.
bool is_minimal_diagnosis(RequirementChecker& checker, const AxiomSet& candidate);
bool is_minimal_conflict(RequirementChecker& checker, const AxiomSet& candidate);

}  // namespace mbd
