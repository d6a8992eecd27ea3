#pragma once

#include <vector>

#include "mw/graph.hpp"

// Reference implementations used by tests and the `check` subcommand.
// Deliberately simple; never consulted by the parse-tree algorithms.
namespace mw::oracles {

// True iff g has a Hamiltonian cycle (subset DP over vertex masks).
// With allow_degenerate, a single vertex or a single edge counts as a
// closed walk.
bool held_karp_hamiltonian(const Graph& g, bool allow_degenerate = false,
                           int cap = 20);

// Minimum number of vertex-disjoint paths covering V(g).
int brute_path_partition(const Graph& g, int cap = 12);

// Exact chromatic number by iterative-deepening backtracking.
int brute_chromatic(const Graph& g, int cap = 16);

// Modular-width by subset enumeration of modules.
int brute_modular_width(const Graph& g, int cap = 8);

// Witness validators.
bool validate_coloring(const Graph& g, const std::vector<int>& color,
                       int claimed_colors);
bool validate_path_partition(const Graph& g,
                             const std::vector<std::vector<int>>& paths);
bool validate_cycle(const Graph& g, const std::vector<int>& cycle);

}  // namespace mw::oracles
