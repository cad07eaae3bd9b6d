#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mbd/problem.hpp"

namespace mbd {

struct NoConflict {};

using ConflictOutcome = std::variant<ConflictSet, NoConflict>;

struct ConflictStats {
    std::uint64_t checks = 0;  // requirement checks issued, memo hits included
};

// Divide-and-conquer search for one minimal conflict among `suspects`
// (ascending id order, split at ceil(n/2)). NoConflict when B′ ∪ suspects
// satisfies every requirement. Throws NotDiagnosable if B′ alone does not.
ConflictOutcome quick_xplain(RequirementChecker& checker, const AxiomSet& suspects, ConflictStats* stats = nullptr);

// Linear acquisition (add in id order until a conflict appears) followed by
// linear minimization. Same contract as quick_xplain.
ConflictOutcome brute_force_conflict(RequirementChecker& checker, const AxiomSet& suspects,
                                     ConflictStats* stats = nullptr);

inline constexpr std::size_t kDefaultEnumerationCap = 16;

enum class Execution { Serial, Parallel };

// Every minimal conflict by level-wise subset enumeration, in canonical
// order. Throws CapExceeded when |O| > cap.
std::vector<ConflictSet> all_minimal_conflicts(const DiagnosisProblem& problem, const OracleFactory& factory,
                                               std::size_t cap = kDefaultEnumerationCap,
                                               Execution exec = Execution::Serial);

// Every minimal diagnosis by level-wise subset enumeration, in canonical
// order. {∅} exactly when O is fault free.
std::vector<Diagnosis> brute_force_diagnoses(const DiagnosisProblem& problem, const OracleFactory& factory,
                                             std::size_t cap = kDefaultEnumerationCap,
                                             Execution exec = Execution::Serial);

}  // namespace mbd
