#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mbd/parser.hpp"
#include "mbd/problem.hpp"

namespace mbd::testing {

inline std::string read_data(const std::string& name) {
    std::ifstream in(std::string(MBD_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline DiagnosisProblem problem_from_text(const std::string& text, bool coherency = false) {
    ProblemText t = parse_problem(text);
    return build_problem(std::move(t.ontology), std::move(t.background), std::move(t.positive), std::move(t.negative),
                         coherency);
}

// The sample knowledge base without test cases.
inline DiagnosisProblem sample(bool coherency) { return problem_from_text(read_data("sample.kb"), coherency); }
// The sample with P = {{B(w)}}, N = {{(not C)(w)}}.
inline DiagnosisProblem sample_tests() { return problem_from_text(read_data("sample-tests.kb"), false); }

// 1-based axiom numbers, as in the examples.
inline AxiomSet ax(std::size_t universe, std::initializer_list<std::size_t> one_based) {
    AxiomSet s(universe);
    for (auto i : one_based) s.insert(i - 1);
    return s;
}

template <typename T>
std::vector<AxiomSet> sets_of(const std::vector<T>& xs) {
    std::vector<AxiomSet> out;
    for (const auto& x : xs) out.push_back(x.axioms);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<AxiomSet> sorted(std::vector<AxiomSet> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace mbd::testing
