#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mbd/problem.hpp"

namespace mbd {

struct RandomSpec {
    std::size_t min_axioms = 5;
    std::size_t max_axioms = 12;
    std::size_t max_test_cases = 3;
    std::size_t classes = 5;
};

// Small random instance over classes A..E, role r and individuals a, b.
// Only diagnosable instances whose ontology is actually faulty are returned;
// the generator retries internally.
DiagnosisProblem random_problem(std::mt19937_64& rng, const RandomSpec& spec = {});

struct SyntheticSpec {
    std::size_t axioms = 1000;
    std::size_t conflicts = 50;
    std::size_t max_conflict_size = 4;
    double overlap = 0.3;  // chance that a conflict branches off an earlier one
    std::uint64_t seed = 7;
};

struct SyntheticInstance {
    DiagnosisProblem problem;
    std::vector<AxiomSet> conflicts;  // every minimal conflict, by construction
};

// Implants minimal conflicts of known composition into filler axioms.
// Conflict k is a subsumption chain R_k ⊑ X ⊑ ... ⊑ ¬R_k with R_k(a) in the
// background; an overlapping conflict shares a prefix of an earlier chain.
// Fillers are chains F_i ⊑ F_{i+1} over names no conflict uses.
SyntheticInstance synthetic_problem(const SyntheticSpec& spec);

// h meets every set and no element of h can be dropped.
bool is_minimal_hitting_set(const AxiomSet& h, const std::vector<AxiomSet>& sets);

}  // namespace mbd
