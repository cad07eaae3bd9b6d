#pragma once

#include <string>
#include <vector>

#include "mbd/generator.hpp"
#include "mbd/hstree.hpp"

namespace mbd {

struct BenchSpec {
    std::vector<SyntheticSpec> instances;
    std::vector<std::size_t> ns{9};
    std::vector<TreeMode> modes{TreeMode::Classic, TreeMode::Inverse};
    TreeLimits limits{20000, 30};
};

// "m=1000,conflicts=20,size=4,seed=7,overlap=0.3,n=1+9,modes=classic+inverse,nodes=20000,seconds=30".
// Instances are separated by ';'; n, modes and the caps apply to all of
// them (the last value given wins). An empty text yields an empty spec.
BenchSpec parse_bench_spec(const std::string& text);

struct BenchRow {
    std::size_t instance = 0;
    std::size_t axioms = 0;
    std::size_t conflicts = 0;
    TreeMode mode = TreeMode::Inverse;
    std::size_t n = 0;
    double wall_ms = 0;
    std::uint64_t decision_calls = 0;
    std::uint64_t direct_calls = 0;    // inv_quick_xplain
    std::uint64_t conflict_calls = 0;  // quick_xplain
    std::size_t diagnoses = 0;
    std::size_t max_alive_nodes = 0;
    bool complete = true;
    bool verified = true;              // every diagnosis hits the implanted conflicts minimally
    std::string families_equal = "na"; // "yes"/"no" once every mode exhausted the diagnoses
};

std::vector<BenchRow> run_benchmark(const BenchSpec& spec);
std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace mbd
