#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mw/graph.hpp"
#include "mw/ilp.hpp"
#include "mw/mdtree.hpp"

namespace mw {

// Summary of a subgraph: fewest covering paths and vertex count.
struct NodeRecord {
  long long ham = 1;
  long long size = 1;
};

// Directed multigraph on quotient vertices induced by a feasible flow.
struct FlowMultigraph {
  int n = 0;
  std::vector<std::vector<long long>> mult;  // mult[i][j] arcs i -> j

  long long out_degree(int v) const;
  long long in_degree(int v) const;
  bool balanced() const;
  bool support_connected() const;  // over all n vertices
};

struct HamOptions {
  bool linear_scan = false;  // replace the binary search over l
  bool eager_cuts = false;   // materialize every bipartition cut up front
  long long node_budget = 200'000'000;
};

// Flow formulation for a Hamiltonian cycle of quotient(G_1,...,G_n):
// balance, per-block upper/lower throughput, nonnegativity, and a
// connectivity cut per bipartition (lazy by default).
IlpInstance build_ham_ilp(const Graph& quotient,
                          const std::vector<NodeRecord>& records,
                          bool eager_cuts = false);

std::optional<FlowMultigraph> has_ham_cycle_product(
    const Graph& quotient, const std::vector<NodeRecord>& records,
    const HamOptions& opt = {});

// Record of the product graph: fewest covering paths found through cycles of
// the product with one extra universal block of independent vertices.
NodeRecord ham_of_product(const Graph& quotient,
                          const std::vector<NodeRecord>& records,
                          const HamOptions& opt = {});

long long ham_number(const Graph& g, const HamOptions& opt = {});
bool hamiltonian_path(const Graph& g, const HamOptions& opt = {});
bool hamiltonian_cycle(const Graph& g, const HamOptions& opt = {});

using Arc = std::pair<int, int>;

// Closed walk through every arc exactly once (Hierholzer), starting at
// `start`, lower-indexed targets first. Throws std::logic_error if the
// multigraph is unbalanced or its support is disconnected.
std::vector<Arc> eulerian_tour(const FlowMultigraph& m, int start);

// provider(i, p) must return a partition of block i into exactly p paths.
using PathProvider =
    std::function<std::vector<std::vector<int>>(int child, long long paths)>;

// Threads the blocks' paths along an Eulerian tour of the flow into one
// cycle covering every block vertex.
std::vector<int> stitch_witness(const Graph& quotient,
                                const PathProvider& provider,
                                const FlowMultigraph& m);

// Exactly ham_number(g) vertex-disjoint paths covering V(g).
std::vector<std::vector<int>> path_partition_witness(const Graph& g,
                                                     const HamOptions& opt = {});

// A Hamiltonian cycle of g, or nullopt when none exists.
std::optional<std::vector<int>> hamiltonian_cycle_witness(
    const Graph& g, const HamOptions& opt = {});

}  // namespace mw
