#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mw/graph.hpp"

namespace mw {

// SplitMix64; same byte stream on every platform.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound), bound >= 1
  std::uint64_t below(std::uint64_t bound) {
    return (std::uint64_t)(((unsigned __int128)next() * bound) >> 64);
  }
  bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }
};

struct GenOptions {
  bool connected_quotient = false;  // resample quotients until connected
};

// Random graph built from a random substitution expression whose every
// operation has at most w operands; the decomposition may find less width.
Graph gen_bounded_mw(int n, int w, std::uint64_t seed, const GenOptions& opt = {});

// Star with k rays, every edge subdivided once: center 0, midpoints 1..k,
// tips k+1..2k.
Graph gen_subdivided_star(int k);

// "cycle N" | "path N" | "complete N" | "complete-bipartite A B" |
// "petersen" | "grotzsch"
Graph gen_named(const std::string& spec);

// Each edge present with probability percent/100.
Graph gen_random(int n, std::uint32_t edge_percent, std::uint64_t seed);

// Every connected graph on exactly n vertices, one representative per
// isomorphism class. Exponential; capped.
std::vector<Graph> enumerate_connected_graphs(int n, int cap = 7);

}  // namespace mw
