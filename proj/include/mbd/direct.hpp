#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mbd/problem.hpp"

namespace mbd {

struct Consistent {};
struct InconsistentRequirements {};

using DirectOutcome = std::variant<Diagnosis, Consistent, InconsistentRequirements>;

struct DirectTrace {
    std::uint64_t checks = 0;       // requirement checks, memo hits included
    std::size_t max_depth = 0;      // deepest findDiagnosis frame (root = 1)
    // Every split performed, in call order: (first half, second half).
    std::vector<std::pair<AxiomSet, AxiomSet>> splits;
};

// Computes one minimal diagnosis directly, without conflicts. Axioms in
// `trusted` are treated as background and never belong to the result.
//   InconsistentRequirements  B′ ∪ trusted already violates the requirements
//   Consistent                O itself satisfies them
// The candidate list O \ trusted is split at floor(n/2).
DirectOutcome inv_quick_xplain(RequirementChecker& checker, const AxiomSet& trusted, DirectTrace* trace = nullptr);
DirectOutcome inv_quick_xplain(RequirementChecker& checker, DirectTrace* trace = nullptr);

}  // namespace mbd
