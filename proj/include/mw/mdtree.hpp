#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mw/graph.hpp"

namespace mw {

enum class NodeKind { Leaf, Union, Join, Prime };

// Algebraic expression over vertex creation, disjoint union, complete join
// and substitution. Nodes live in a flat pool; `root` indexes into it.
struct ParseTree {
  struct Node {
    NodeKind kind = NodeKind::Leaf;
    int vertex = -1;            // Leaf only
    Graph quotient;             // Prime only; quotient.n == children.size()
    std::vector<int> children;  // node ids
  };
  std::vector<Node> nodes;
  int root = -1;

  const Node& at(int id) const { return nodes[id]; }
  int add(Node n) {
    nodes.push_back(std::move(n));
    return (int)nodes.size() - 1;
  }
  int leaf_count() const;
};

// True iff every vertex outside s sees all of s or none of s.
bool is_module(const Graph& g, const VertexSet& s);

// Canonical decomposition: components under union, co-components under join,
// maximal proper strong modules under a prime quotient. Children are ordered
// by smallest contained vertex id.
ParseTree modular_decomposition(const Graph& g);

// Maximum arity over Prime nodes; 0 if the tree has none.
int modular_width(const ParseTree& t);

// Rewrites every Union/Join node as a left-leaning chain of arity-2 Prime
// nodes (quotients I2 / K2). Leaves and Prime nodes pass through.
ParseTree normalize(const ParseTree& t);

// Rebuilds the graph the expression describes, on the leaves' vertex ids.
// Leaves must carry a permutation of 0..n-1.
Graph evaluate(const ParseTree& t);

struct NdPartition {
  std::vector<std::vector<int>> classes;
  std::vector<bool> clique;  // class induces a clique (meaningful for size >= 2)
  Graph class_graph;         // all-or-none adjacency between classes
};

// Partition into twin classes (equal neighborhoods up to each other).
std::pair<int, NdPartition> neighborhood_diversity(const Graph& g);

std::string to_json(const ParseTree& t);
std::string to_dot(const ParseTree& t);

}  // namespace mw
