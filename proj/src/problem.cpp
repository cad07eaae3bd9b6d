#include "mbd/problem.hpp"

#include <set>

#include "mbd/errors.hpp"

namespace mbd {

DiagnosisProblem::DiagnosisProblem() : data_(finish(Data{})) {}

std::shared_ptr<const DiagnosisProblem::Data> DiagnosisProblem::finish(Data d) {
    d.background_prime = d.background.sentences();
    for (const auto& p : d.positive) {
        d.background_prime.insert(d.background_prime.end(), p.sentences.begin(), p.sentences.end());
    }
    d.signature = d.ontology.signature();
    d.signature.merge(d.background.signature());
    for (const auto* group : {&d.positive, &d.negative}) {
        for (const auto& tc : *group)
            for (const auto& s : tc.sentences) d.signature.add(s);
    }
    return std::make_shared<const Data>(std::move(d));
}

DiagnosisProblem assemble_problem(KnowledgeBase ontology, KnowledgeBase background, std::vector<TestCase> positive,
                                  std::vector<TestCase> negative, bool require_coherency) {
    for (const auto& ax : ontology.axioms()) {
        if (background.contains(ax.sentence)) {
            throw DuplicateAxiom("axiom occurs in both ontology and background: " + to_string(ax.sentence));
        }
    }
    std::set<std::string> pos_keys;
    for (auto& tc : positive) {
        if (tc.sentences.empty()) throw Error("empty positive test case");
        tc.polarity = Polarity::Positive;
        pos_keys.insert(tc.key());
    }
    for (auto& tc : negative) {
        if (tc.sentences.empty()) throw Error("empty negative test case");
        tc.polarity = Polarity::Negative;
        if (pos_keys.count(tc.key())) throw Error("test case is both positive and negative: " + tc.key());
    }
    DiagnosisProblem::Data d;
    d.ontology = std::move(ontology);
    d.background = std::move(background);
    d.positive = std::move(positive);
    d.negative = std::move(negative);
    d.require_coherency = require_coherency;
    return DiagnosisProblem(DiagnosisProblem::finish(std::move(d)));
}

DiagnosisProblem DiagnosisProblem::with_test_case(TestCase tc) const {
    if (tc.sentences.empty()) throw Error("empty test case");
    const std::string key = tc.key();
    const auto& opposite = tc.polarity == Polarity::Positive ? data_->negative : data_->positive;
    for (const auto& other : opposite) {
        if (other.key() == key) throw Error("test case is both positive and negative: " + key);
    }
    Data d = *data_;
    (tc.polarity == Polarity::Positive ? d.positive : d.negative).push_back(std::move(tc));
    d.version = data_->version + 1;
    return DiagnosisProblem(finish(std::move(d)));
}

DiagnosisProblem DiagnosisProblem::with_background(const std::vector<Sentence>& extra) const {
    Data d = *data_;
    for (const auto& s : extra) {
        if (!d.background.contains(s)) d.background.add(s);
    }
    d.version = data_->version + 1;
    return DiagnosisProblem(finish(std::move(d)));
}

OracleFactory default_oracle_factory(ReasonerLimits limits) {
    return [limits](const DiagnosisProblem& p) { return make_grounding_reasoner(p.signature(), limits); };
}

DiagnosisProblem build_problem(KnowledgeBase ontology, KnowledgeBase background, std::vector<TestCase> positive,
                               std::vector<TestCase> negative, bool require_coherency, ReasonerOracle& oracle) {
    DiagnosisProblem p = assemble_problem(std::move(ontology), std::move(background), std::move(positive),
                                          std::move(negative), require_coherency);
    RequirementChecker checker(p, oracle);
    if (!checker.background_holds()) {
        throw NotDiagnosable("background and positive test cases violate the requirements on their own");
    }
    return p;
}

DiagnosisProblem build_problem(KnowledgeBase ontology, KnowledgeBase background, std::vector<TestCase> positive,
                               std::vector<TestCase> negative, bool require_coherency) {
    DiagnosisProblem p = assemble_problem(std::move(ontology), std::move(background), std::move(positive),
                                          std::move(negative), require_coherency);
    auto oracle = default_oracle_factory()(p);
    RequirementChecker checker(p, *oracle);
    if (!checker.background_holds()) {
        throw NotDiagnosable("background and positive test cases violate the requirements on their own");
    }
    return p;
}

namespace {

bool requirements_hold(ReasonerOracle& oracle, std::span<const SentenceHandle> kb,
                       std::span<const std::vector<SentenceHandle>> negatives, bool require_coherency) {
    if (!oracle.is_consistent(kb)) return false;
    if (require_coherency && !oracle.coherence(kb).coherent) return false;
    for (const auto& n : negatives) {
        if (oracle.entails(kb, n)) return false;
    }
    return true;
}

}  // namespace

bool verify_requirements(ReasonerOracle& oracle, std::span<const SentenceHandle> background_prime,
                         const AxiomSet& candidate, std::span<const SentenceHandle> ontology,
                         std::span<const std::vector<SentenceHandle>> negatives, bool require_coherency) {
    std::vector<SentenceHandle> kb(background_prime.begin(), background_prime.end());
    for (AxiomId i = 0; i < ontology.size(); ++i) {
        if (!candidate.contains(i)) kb.push_back(ontology[i]);
    }
    return requirements_hold(oracle, kb, negatives, require_coherency);
}

RequirementChecker::RequirementChecker(DiagnosisProblem problem, ReasonerOracle& oracle)
    : problem_(std::move(problem)), oracle_(oracle) {
    for (const auto& s : problem_.background_prime()) background_.push_back(oracle_.intern(s));
    for (const auto& ax : problem_.ontology().axioms()) ontology_.push_back(oracle_.intern(ax.sentence));
    for (const auto& n : problem_.negative()) {
        std::vector<SentenceHandle> hs;
        for (const auto& s : n.sentences) hs.push_back(oracle_.intern(s));
        negatives_.push_back(std::move(hs));
    }
}

std::vector<SentenceHandle> RequirementChecker::kb(const AxiomSet& active) const {
    std::vector<SentenceHandle> out = background_;
    for (AxiomId id : active.ids()) out.push_back(ontology_[id]);
    return out;
}

bool RequirementChecker::evaluate(std::vector<SentenceHandle>& kb) {
    ++evaluations_;
    return requirements_hold(oracle_, kb, negatives_, problem_.require_coherency());
}

bool RequirementChecker::holds(const AxiomSet& active) {
    ++requests_;
    if (memoize_) {
        if (auto it = memo_.find(active); it != memo_.end()) return it->second;
    }
    auto handles = kb(active);
    bool verdict = evaluate(handles);
    if (memoize_) memo_.emplace(active, verdict);
    return verdict;
}

bool RequirementChecker::holds_with(const AxiomSet& active, std::span<const SentenceHandle> extra) {
    auto handles = kb(active);
    handles.insert(handles.end(), extra.begin(), extra.end());
    return evaluate(handles);
}

bool is_valid_diagnosis(RequirementChecker& checker, const AxiomSet& candidate) {
    return checker.is_valid_diagnosis(candidate);
}

bool is_minimal_diagnosis(RequirementChecker& checker, const AxiomSet& candidate) {
    if (!checker.is_valid_diagnosis(candidate)) return false;
    for (AxiomId id : candidate.ids()) {
        AxiomSet smaller = candidate;
        smaller.erase(id);
        if (checker.is_valid_diagnosis(smaller)) return false;
    }
    return true;
}

bool is_minimal_conflict(RequirementChecker& checker, const AxiomSet& candidate) {
    if (!checker.is_conflict(candidate)) return false;
    for (AxiomId id : candidate.ids()) {
        AxiomSet smaller = candidate;
        smaller.erase(id);
        if (checker.is_conflict(smaller)) return false;
    }
    return true;
}

}  // namespace mbd
