#include "mbd/model.hpp"

#include <algorithm>

#include "mbd/errors.hpp"

namespace mbd {

std::string format_axioms(const AxiomSet& s) {
    std::string out = "[";
    bool first = true;
    for (AxiomId id : s.ids()) {
        if (!first) out += ", ";
        out += "ax" + std::to_string(id + 1);
        first = false;
    }
    return out + "]";
}

AxiomKind kind_of(const Sentence& s) {
    switch (s.kind) {
    case SentenceKind::Subsumption:
        return AxiomKind::TboxSubsumption;
    case SentenceKind::Equivalence:
        return AxiomKind::TboxEquivalence;
    case SentenceKind::ClassAssertion:
        return AxiomKind::ClassAssertion;
    case SentenceKind::RoleAssertion:
        return AxiomKind::RoleAssertion;
    }
    return AxiomKind::ClassAssertion;
}

KnowledgeBase::KnowledgeBase(const std::vector<Sentence>& sentences) {
    for (const auto& s : sentences) add(s);
}

const Axiom& KnowledgeBase::add(Sentence s, std::optional<double> confidence) {
    std::string key = to_string(s);
    if (!keys_.insert(key).second) throw DuplicateAxiom("duplicate axiom: " + key);
    axioms_.push_back(Axiom{axioms_.size(), std::move(s), confidence});
    return axioms_.back();
}

bool KnowledgeBase::contains(const Sentence& s) const {
    return keys_.count(to_string(s)) > 0;
}

Signature KnowledgeBase::signature() const {
    Signature sig;
    for (const auto& a : axioms_) sig.add(a.sentence);
    return sig;
}

std::vector<Sentence> KnowledgeBase::sentences() const {
    std::vector<Sentence> out;
    out.reserve(axioms_.size());
    for (const auto& a : axioms_) out.push_back(a.sentence);
    return out;
}

std::string TestCase::key() const {
    std::vector<std::string> parts;
    for (const auto& s : sentences) parts.push_back(to_string(s));
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::string out;
    for (const auto& p : parts) out += p + ";";
    return out;
}

}  // namespace mbd
