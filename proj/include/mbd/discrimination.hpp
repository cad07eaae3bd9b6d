#pragma once

#include <string>
#include <vector>

#include "mbd/problem.hpp"

namespace mbd {

enum class Measure { Entropy, SplitInHalf };
enum class Answer { Yes, No };

const char* to_string(Measure m);
const char* to_string(Answer a);

// Indices into the leading-diagnosis list.
struct Partition {
    std::vector<std::size_t> dp;  // predict yes: O \ D ∪ B′ ⊨ Q
    std::vector<std::size_t> dn;  // predict no: O \ D ∪ B′ ∪ Q violates the requirements
    std::vector<std::size_t> d0;  // uncommitted
};

struct Query {
    std::vector<Sentence> sentences;
    std::vector<std::size_t> pool_indices;  // ascending; the deterministic identity
    Partition partition;
    double score = 0;
};

struct QueryOptions {
    bool singletons_only = false;
};

// Candidate query sentences: every atomic class assertion over the problem's
// classes and individuals, then every atomic subsumption A SubClassOf B with
// A != B. Sorted by name, so the order is deterministic.
std::vector<Sentence> query_pool(const DiagnosisProblem& problem);

// Sentences of the pool entailed by (O \ D) ∪ B′, as pool indices.
std::vector<std::size_t> entailed_pool(RequirementChecker& checker, const AxiomSet& diagnosis,
                                       const std::vector<SentenceHandle>& pool);

// One query per nonempty proper subset S of `leading` whose sentence set
// Q(S) = ⋂_{i∈S} E_i \ ⋃_{j∉S} E_j is nonempty (E_i: entailed pool of D_i).
// Computed by grouping pool sentences by their entailment pattern, which
// yields exactly the nonempty Q(S) without visiting all 2^n - 2 subsets.
// Only queries with DP and DN both nonempty are returned.
std::vector<Query> generate_queries(RequirementChecker& checker, const std::vector<AxiomSet>& leading,
                                    const std::vector<Sentence>& pool, QueryOptions options = {});

Partition partition_diagnoses(RequirementChecker& checker, const std::vector<Sentence>& query,
                              const std::vector<AxiomSet>& leading);

// | |DP| - |DN| | + |D0|; lower is better.
double score_split_in_half(const Partition& p);

// p·log2 p + q·log2 q + p(D0) + 1 with p = p(DP) + p(D0)/2, q = 1 - p.
// Throws DegenerateQuery when p ∈ {0, 1} and p(D0) = 0.
double score_entropy(const Partition& p, const std::vector<double>& probs);

// Argmin of the measure; ties go to the smaller D0, then to the smaller
// pool-index vector. Degenerate queries are skipped. Throws
// NoDiscriminatingQuery when nothing remains. Sets the winner's score.
Query select_best_query(const std::vector<Query>& queries, Measure measure, const std::vector<double>& probs);

inline constexpr double kDefaultAxiomPrior = 0.01;
inline constexpr double kUnratedAxiomPrior = 0.0001;

// Fault probability per ontology axiom: 1 - v for an axiom with confidence
// v. Axioms without a confidence get kUnratedAxiomPrior when some other axiom
// has one, kDefaultAxiomPrior otherwise.
std::vector<double> axiom_priors(const KnowledgeBase& ontology);

// p(D) ∝ Π_{ax∈D} p(ax) · Π_{ax∉D} (1 - p(ax)), normalized over `leading`.
std::vector<double> diagnosis_priors(const std::vector<double>& axiom_priors, const std::vector<AxiomSet>& leading);

// Unnormalized log-weight of one diagnosis under the same formula.
double log_prior(const std::vector<double>& axiom_priors, const AxiomSet& d);

// Likelihood of an answer given the partition class: agreeing 1,
// contradicting 0, uncommitted 1/2.
double answer_likelihood(const Partition& p, std::size_t index, Answer answer);

// Posterior over the same diagnoses. Throws AllEliminated if every
// diagnosis is contradicted.
std::vector<double> bayes_update(const std::vector<double>& probs, const Partition& p, Answer answer);

}  // namespace mbd
