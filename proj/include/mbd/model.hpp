#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "mbd/axiom_set.hpp"
#include "mbd/syntax.hpp"

namespace mbd {

enum class AxiomKind { TboxSubsumption, TboxEquivalence, ClassAssertion, RoleAssertion };

AxiomKind kind_of(const Sentence& s);

struct Axiom {
    AxiomId id = 0;  // position in its knowledge base
    Sentence sentence;
    std::optional<double> confidence;  // the `@ v` suffix, if any

    AxiomKind kind() const { return kind_of(sentence); }
};

// Ordered list of axioms. Ids are positional and expressions are unique.
class KnowledgeBase {
public:
    KnowledgeBase() = default;
    explicit KnowledgeBase(const std::vector<Sentence>& sentences);

    // Throws DuplicateAxiom when an identical expression is already present.
    const Axiom& add(Sentence s, std::optional<double> confidence = std::nullopt);

    const std::vector<Axiom>& axioms() const { return axioms_; }
    std::size_t size() const { return axioms_.size(); }
    bool empty() const { return axioms_.empty(); }
    const Axiom& operator[](AxiomId id) const { return axioms_[id]; }
    bool contains(const Sentence& s) const;

    Signature signature() const;
    std::vector<Sentence> sentences() const;

private:
    std::vector<Axiom> axioms_;
    std::unordered_set<std::string> keys_;
};

enum class Polarity { Positive, Negative };

// A set of sentences. Positive: the intended ontology must entail all of
// them. Negative: it must not entail their conjunction.
struct TestCase {
    std::vector<Sentence> sentences;
    Polarity polarity = Polarity::Positive;

    std::string key() const;  // order-insensitive identity
};

struct Diagnosis {
    AxiomSet axioms;
    bool minimal = false;
};

struct ConflictSet {
    AxiomSet axioms;
    bool minimal = false;
};

}  // namespace mbd
