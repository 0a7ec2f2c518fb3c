#pragma once

#include "torusham/map.hpp"

#include <optional>
#include <vector>

namespace torusham {

struct SearchBudget {
    long max_nodes = 50'000'000;
    double time_limit_s = 120.0;
};

enum class OracleStatus { Hamiltonian, NonHamiltonian, Inconclusive };

struct OracleVerdict {
    OracleStatus status = OracleStatus::Inconclusive;
    std::vector<int> cycle; // witness when Hamiltonian
    long nodes_explored = 0;
    double elapsed_s = 0.0;
};

struct LongestCycleResult {
    int length = 0;                // best length found
    std::vector<int> witness;      // a simple cycle of that length
    bool exact = false;            // search space exhausted
    long nodes_explored = 0;
    double elapsed_s = 0.0;
};

// Exhaustive backtracking with degree forcing and connectivity pruning.
// Extends from the lowest-id vertex, neighbors in rotation order, so the
// verdict and witness are deterministic. NonHamiltonian means the search
// space was exhausted.
OracleVerdict find_hamiltonian(const std::vector<std::vector<int>>& adjacency,
                               const SearchBudget& budget = {});
OracleVerdict find_hamiltonian(const ToroidalMap& map, const SearchBudget& budget = {});

// Exact maximum simple-cycle length by exhaustive search; guarded to small
// instances, Inconclusive (exact=false) once the budget runs out.
LongestCycleResult longest_cycle(const std::vector<std::vector<int>>& adjacency,
                                 const SearchBudget& budget = {});
LongestCycleResult longest_cycle(const ToroidalMap& map, const SearchBudget& budget = {});

// Exact vertex connectivity via unit-capacity vertex splitting and max-flow
// (fixed source against its non-neighbors, plus pairs of its neighbors).
int vertex_connectivity(const std::vector<std::vector<int>>& adjacency);
int vertex_connectivity(const ToroidalMap& map);

// The cycle-length bound evaluators of the {3,12,12} counterexample: a
// non-contractible kind-cycle of length 24 extended by m1 twelve-gons and
// m2 triangles, and a contractible disk with m1 twelve-gons and m2
// triangles.
long g1_extension_length(long base, long m1, long m2);   // base + 6*m1 + m2
long disk_boundary_length(long m1, long m2);             // 10*m1 + m2 + 2

} // namespace torusham
