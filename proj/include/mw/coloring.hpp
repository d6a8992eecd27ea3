#pragma once

#include <cstdint>
#include <vector>

#include "mw/graph.hpp"
#include "mw/mdtree.hpp"

namespace mw {

// Partition a ground set into at most k blocks maximizing the sum of block
// costs; the empty block contributes 0. cost has one entry per subset mask.
// A nonempty `usable` vector restricts which subsets may appear as blocks.
struct WeightedPartitionProblem {
  int n = 0;
  int k = 1;
  std::vector<long long> cost;
  std::vector<char> usable;  // empty = every subset allowed
  int limit = 20;
};

struct PartitionResult {
  long long value = 0;
  std::vector<std::uint32_t> blocks;  // nonempty blocks, as bitmasks
};

// Exact DP over submasks, O(3^n * k).
PartitionResult max_weighted_partition(const WeightedPartitionProblem& p);

// Size-ranked zeta/Moebius route: counts partitions per total weight with
// inclusion-exclusion over subsets and reads off the best achievable total.
// Value only; exact as long as k^n fits in 64 bits.
long long max_weighted_partition_value_fast(const WeightedPartitionProblem& p);

struct ColorOptions {
  bool fast_mwp = false;
  int mwp_limit = 20;
};

// Chromatic number of quotient(G_1,...,G_n) given the children's numbers.
int chromatic_of_substitution(const Graph& quotient,
                              const std::vector<int>& child_chi,
                              const ColorOptions& opt = {});

// Exact chromatic number by bottom-up evaluation of the parse tree.
int chromatic_number(const Graph& g, const ColorOptions& opt = {});

struct ColoringWitness {
  std::vector<int> color;
  int colors_used = 0;
};

// Proper coloring using exactly chromatic_number(g) colors.
ColoringWitness coloring_witness(const Graph& g, const ColorOptions& opt = {});

}  // namespace mw
