#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mbd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// B ∪ ⋃P violates the requirements on its own: the test cases contradict
// each other or the background.
struct NotDiagnosable : Error {
    using Error::Error;
};

struct DuplicateAxiom : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

// The sentence lies outside what the shipped grounding reasoner supports.
struct UnsupportedConstruct : Error {
    using Error::Error;
};

// A configured solver/tree budget was exhausted before a verdict.
struct ResourceLimit : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct InvalidPhase : Error {
    using Error::Error;
};

struct NoDiscriminatingQuery : Error {
    using Error::Error;
};

struct DegenerateQuery : Error {
    using Error::Error;
};

struct AllEliminated : Error {
    using Error::Error;
};

}  // namespace mbd
