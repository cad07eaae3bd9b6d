#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mbd/model.hpp"

namespace mbd {

// Textual diagnosis problem:
//
//   # comment
//   [ontology]
//   A SubClassOf B                 @ 0.85   (optional confidence)
//   B SubClassOf D and not some s C
//   [background]
//   A(w)
//   s(v,w)
//   [positive]
//   B(w)                           one test case per line,
//   [negative]                     sentences separated by ';'
//   (not C)(w)
//
// Class expressions: names, `not`, `and`, `or`, `some r C`, `only r C`,
// parentheses; `not` binds tighter than `and`, which binds tighter than `or`.
// Lines before the first section header belong to [ontology].
struct ProblemText {
    KnowledgeBase ontology;
    KnowledgeBase background;
    std::vector<TestCase> positive;
    std::vector<TestCase> negative;
};

ConceptPtr parse_concept(std::string_view text);
Sentence parse_sentence(std::string_view text);

// Section-less axiom list; ids in line order.
KnowledgeBase parse_knowledge_base(std::string_view text);
ProblemText parse_problem(std::string_view text);

std::string print_knowledge_base(const KnowledgeBase& kb);
std::string print_problem(const ProblemText& p);

}  // namespace mbd
