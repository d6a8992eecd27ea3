#pragma once

#include <utility>
#include <vector>

namespace mw {

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1, sorted adjacency lists.
// Values are treated as immutable once built; share freely across threads.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  bool has_edge(int u, int v) const;
  int degree(int v) const { return (int)adj[v].size(); }
  long long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool operator==(const Graph&) const = default;
};

Graph make_empty(int n);
Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Throws std::logic_error if adjacency is not symmetric, irreflexive,
// sorted and in range.
void check_invariants(const Graph& g);

Graph complement(const Graph& g);

// Replace vertex i of the quotient by parts[i]; blocks are laid out
// consecutively in operand order, joined completely across each quotient edge.
Graph substitute(const Graph& quotient, const std::vector<Graph>& parts);

// g plus `count` pairwise non-adjacent vertices adjacent to all of g.
Graph add_universal(const Graph& g, int count);

// Vertices of s reindexed to 0..|s|-1 preserving order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace mw
