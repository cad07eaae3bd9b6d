#include "mbd/syntax.hpp"

#include <stdexcept>

namespace mbd {

ConceptPtr make_atom(std::string name) {
    return std::make_shared<const Concept>(Concept{ConceptKind::Atom, std::move(name), {}});
}

ConceptPtr make_not(ConceptPtr c) {
    return std::make_shared<const Concept>(Concept{ConceptKind::Not, {}, {std::move(c)}});
}

ConceptPtr make_and(std::vector<ConceptPtr> args) {
    if (args.size() < 2) throw std::invalid_argument("conjunction needs at least two operands");
    return std::make_shared<const Concept>(Concept{ConceptKind::And, {}, std::move(args)});
}

ConceptPtr make_or(std::vector<ConceptPtr> args) {
    if (args.size() < 2) throw std::invalid_argument("disjunction needs at least two operands");
    return std::make_shared<const Concept>(Concept{ConceptKind::Or, {}, std::move(args)});
}

ConceptPtr make_some(std::string role, ConceptPtr filler) {
    return std::make_shared<const Concept>(Concept{ConceptKind::Some, std::move(role), {std::move(filler)}});
}

ConceptPtr make_only(std::string role, ConceptPtr filler) {
    return std::make_shared<const Concept>(Concept{ConceptKind::Only, std::move(role), {std::move(filler)}});
}

namespace {

bool is_binary(const Concept& c) { return c.kind == ConceptKind::And || c.kind == ConceptKind::Or; }

std::string operand(const Concept& c) {
    std::string s = to_string(c);
    return is_binary(c) ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const Concept& c) {
    switch (c.kind) {
    case ConceptKind::Atom:
        return c.name;
    case ConceptKind::Not:
        return "not " + operand(*c.args[0]);
    case ConceptKind::Some:
        return "some " + c.name + " " + operand(*c.args[0]);
    case ConceptKind::Only:
        return "only " + c.name + " " + operand(*c.args[0]);
    case ConceptKind::And:
    case ConceptKind::Or: {
        const char* op = c.kind == ConceptKind::And ? " and " : " or ";
        std::string out;
        for (std::size_t i = 0; i < c.args.size(); ++i) {
            if (i) out += op;
            out += operand(*c.args[i]);
        }
        return out;
    }
    }
    return {};
}

Sentence Sentence::subsumption(ConceptPtr sub, ConceptPtr sup) {
    Sentence s;
    s.kind = SentenceKind::Subsumption;
    s.lhs = std::move(sub);
    s.rhs = std::move(sup);
    return s;
}

Sentence Sentence::equivalence(ConceptPtr left, ConceptPtr right) {
    Sentence s;
    s.kind = SentenceKind::Equivalence;
    s.lhs = std::move(left);
    s.rhs = std::move(right);
    return s;
}

Sentence Sentence::class_assertion(ConceptPtr c, std::string individual) {
    Sentence s;
    s.kind = SentenceKind::ClassAssertion;
    s.lhs = std::move(c);
    s.subject = std::move(individual);
    return s;
}

Sentence Sentence::role_assertion(std::string role, std::string subject, std::string object) {
    Sentence s;
    s.kind = SentenceKind::RoleAssertion;
    s.role = std::move(role);
    s.subject = std::move(subject);
    s.object = std::move(object);
    return s;
}

std::string to_string(const Sentence& s) {
    switch (s.kind) {
    case SentenceKind::Subsumption:
        return to_string(*s.lhs) + " SubClassOf " + to_string(*s.rhs);
    case SentenceKind::Equivalence:
        return to_string(*s.lhs) + " EquivalentTo " + to_string(*s.rhs);
    case SentenceKind::ClassAssertion:
        if (s.lhs->kind == ConceptKind::Atom) return s.lhs->name + "(" + s.subject + ")";
        return "(" + to_string(*s.lhs) + ")(" + s.subject + ")";
    case SentenceKind::RoleAssertion:
        return s.role + "(" + s.subject + "," + s.object + ")";
    }
    return {};
}

void Signature::add(const Concept& c) {
    switch (c.kind) {
    case ConceptKind::Atom:
        classes.insert(c.name);
        break;
    case ConceptKind::Some:
    case ConceptKind::Only:
        roles.insert(c.name);
        [[fallthrough]];
    default:
        for (const auto& a : c.args) add(*a);
    }
}

void Signature::add(const Sentence& s) {
    if (s.lhs) add(*s.lhs);
    if (s.rhs) add(*s.rhs);
    if (s.kind == SentenceKind::RoleAssertion) roles.insert(s.role);
    if (!s.subject.empty()) individuals.insert(s.subject);
    if (!s.object.empty()) individuals.insert(s.object);
}

void Signature::merge(const Signature& other) {
    classes.insert(other.classes.begin(), other.classes.end());
    roles.insert(other.roles.begin(), other.roles.end());
    individuals.insert(other.individuals.begin(), other.individuals.end());
}

}  // namespace mbd
