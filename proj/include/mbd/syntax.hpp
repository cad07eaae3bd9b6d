#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mbd {

enum class ConceptKind { Atom, Not, And, Or, Some, Only };

struct Concept;
using ConceptPtr = std::shared_ptr<const Concept>;

// Immutable class expression. `name` holds the class name for atoms and the
// role name for Some/Only; `args` holds the operands.
struct Concept {
    ConceptKind kind;
    std::string name;
    std::vector<ConceptPtr> args;
};

ConceptPtr make_atom(std::string name);
ConceptPtr make_not(ConceptPtr c);
ConceptPtr make_and(std::vector<ConceptPtr> args);
ConceptPtr make_or(std::vector<ConceptPtr> args);
ConceptPtr make_some(std::string role, ConceptPtr filler);
ConceptPtr make_only(std::string role, ConceptPtr filler);

// Concrete syntax, e.g. `D and not some s C`. Also the structural identity
// of a concept: two concepts are equal iff their strings are equal.
std::string to_string(const Concept& c);

enum class SentenceKind { Subsumption, Equivalence, ClassAssertion, RoleAssertion };

// One logical sentence: a TBox axiom C SubClassOf D / C EquivalentTo D, a
// class assertion C(a), or a role assertion r(a,b).
struct Sentence {
    SentenceKind kind = SentenceKind::ClassAssertion;
    ConceptPtr lhs;  // subsumee / left side / asserted concept
    ConceptPtr rhs;  // subsumer / right side
    std::string role;
    std::string subject;
    std::string object;

    static Sentence subsumption(ConceptPtr sub, ConceptPtr sup);
    static Sentence equivalence(ConceptPtr left, ConceptPtr right);
    static Sentence class_assertion(ConceptPtr c, std::string individual);
    static Sentence role_assertion(std::string role, std::string subject, std::string object);

    bool is_tbox() const {
        return kind == SentenceKind::Subsumption || kind == SentenceKind::Equivalence;
    }
};

std::string to_string(const Sentence& s);

inline bool operator==(const Sentence& a, const Sentence& b) { return to_string(a) == to_string(b); }

struct Signature {
    std::set<std::string> classes;
    std::set<std::string> roles;
    std::set<std::string> individuals;

    void add(const Concept& c);
    void add(const Sentence& s);
    void merge(const Signature& other);
};

}  // namespace mbd
