#include "mw/gen.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mw/errors.hpp"

namespace mw {

namespace {

bool connected(const Graph& g) {
  if (g.n == 0) return false;
  std::vector<bool> seen(g.n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == g.n;
}

Graph random_quotient(int a, SplitMix64& rng, const GenOptions& opt) {
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
      for (int j = i + 1; j < a; ++j)
        if (rng.chance(1, 2)) edges.emplace_back(i, j);
    Graph q = from_edges(a, edges);
    if (!opt.connected_quotient || connected(q)) return q;
  }
}

Graph gen_rec(int n, int w, SplitMix64& rng, const GenOptions& opt) {
  if (n == 1) return make_empty(1);
  int arity = 2 + (int)rng.below((std::uint64_t)std::min(w, n) - 1);
  // split n into `arity` positive parts via distinct cut points
  std::set<int> cuts;
  while ((int)cuts.size() < arity - 1)
    cuts.insert(1 + (int)rng.below((std::uint64_t)n - 1));
  std::vector<int> sizes;
  int prev = 0;
  for (int c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  Graph quotient = random_quotient(arity, rng, opt);
  std::vector<Graph> parts;
  for (int s : sizes) parts.push_back(gen_rec(s, w, rng, opt));
  return substitute(quotient, parts);
}

}  // namespace

Graph gen_bounded_mw(int n, int w, std::uint64_t seed, const GenOptions& opt) {
  if (n < 1) throw std::invalid_argument("gen_bounded_mw: n must be >= 1");
  if (w < 2) throw std::invalid_argument("gen_bounded_mw: width must be >= 2");
  SplitMix64 rng(seed);
  return gen_rec(n, w, rng, opt);
}

Graph gen_subdivided_star(int k) {
  if (k < 2) throw std::invalid_argument("gen_subdivided_star: k must be >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, k + i);
  }
  return from_edges(2 * k + 1, edges);
}

namespace {

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_edges(n, edges);
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_edges(n, edges);
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs >= 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return from_edges(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("complete bipartite sides must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return from_edges(a + b, edges);
}

Graph make_petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return from_edges(10, edges);
}

Graph make_grotzsch() {
  // cycle 0..4, shadow vertices 5..9, apex 10
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, (i + 1) % 5);
    edges.emplace_back(5 + i, (i + 4) % 5);
    edges.emplace_back(5 + i, 10);
  }
  return from_edges(11, edges);
}

}  // namespace

Graph gen_named(const std::string& spec) {
  std::istringstream in(spec);
  std::string name;
  in >> name;
  auto want_int = [&](const char* what) {
    long long v;
    if (!(in >> v))
      throw std::invalid_argument(std::string("gen_named: expected ") + what +
                                  " after '" + name + "'");
    return (int)v;
  };
  if (name == "cycle") return make_cycle(want_int("length"));
  if (name == "path") return make_path(want_int("length"));
  if (name == "complete") return make_complete(want_int("order"));
  if (name == "complete-bipartite") {
    int a = want_int("side");
    return make_complete_bipartite(a, want_int("side"));
  }
  if (name == "petersen") return make_petersen();
  if (name == "grotzsch") return make_grotzsch();
  throw std::invalid_argument("gen_named: unknown family '" + name + "'");
}

Graph gen_random(int n, std::uint32_t edge_percent, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gen_random: n must be >= 0");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < edge_percent) edges.emplace_back(i, j);
  return from_edges(n, edges);
}

namespace {

// Canonical form: minimum adjacency mask over the vertex orderings that
// respect a stable degree-refinement coloring. The refinement is an
// isomorphism invariant, so equal canonical masks mean isomorphic graphs.
struct Canonizer {
  int n;
  std::vector<int> epos;  // edge slot per pair, colex

  explicit Canonizer(int n_) : n(n_), epos(n_ * n_, -1) {
    int e = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        epos[i * n + j] = e;
        epos[j * n + i] = e;
        ++e;
      }
  }

  std::vector<int> stable_colors(const std::vector<std::uint32_t>& nb) const {
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = __builtin_popcount(nb[v]);
    while (true) {
      std::vector<std::pair<std::vector<int>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> s{color[v]};
        std::vector<int> around;
        for (int w = 0; w < n; ++w)
          if (nb[v] & (1u << w)) around.push_back(color[w]);
        std::sort(around.begin(), around.end());
        s.insert(s.end(), around.begin(), around.end());
        sig[v] = {std::move(s), v};
      }
      std::vector<std::vector<int>> uniq;
      for (auto& s : sig) uniq.push_back(s.first);
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      std::vector<int> fresh(n);
      for (int v = 0; v < n; ++v)
        fresh[v] = (int)(std::lower_bound(uniq.begin(), uniq.end(), sig[v].first) -
                         uniq.begin());
      if (fresh == color) return color;
      color = std::move(fresh);
    }
  }

  std::uint32_t permuted(const std::vector<std::uint32_t>& nb,
                         const std::vector<int>& perm) const {
    // perm[slot] = original vertex placed at slot
    std::uint32_t mask = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (nb[perm[i]] & (1u << perm[j]))
          mask |= 1u << epos[i * n + j];
    return mask;
  }

  std::uint32_t canonical(const std::vector<std::uint32_t>& nb) const {
    auto color = stable_colors(nb);
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      return color[a] != color[b] ? color[a] < color[b] : a < b;
    });
    std::vector<std::pair<int, int>> groups;  // [from, to) runs of one color
    for (int i = 0; i < n;) {
      int j = i;
      while (j < n && color[perm[j]] == color[perm[i]]) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    // odometer over independent within-group permutations
    std::uint32_t best = ~0u;
    while (true) {
      best = std::min(best, permuted(nb, perm));
      int g = (int)groups.size() - 1;
      while (g >= 0 && !std::next_permutation(perm.begin() + groups[g].first,
                                              perm.begin() + groups[g].second))
        --g;
      if (g < 0) break;
    }
    return best;
  }
};

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n, int cap) {
  if (n < 1)
    throw std::invalid_argument("enumerate_connected_graphs: n must be >= 1");
  if (n > std::min(cap, 7))
    throw capacity_error("enumerate_connected_graphs: n above cap");
  if (n == 1) return {make_empty(1)};

  const int E = n * (n - 1) / 2;
  Canonizer canon(n);
  std::set<std::uint32_t> reps;
  std::vector<std::uint32_t> nb(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << E); ++mask) {
    for (int v = 0; v < n; ++v) nb[v] = 0;
    {
      int e = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++e)
          if (mask & (std::uint32_t(1) << e)) {
            nb[i] |= 1u << j;
            nb[j] |= 1u << i;
          }
    }
    // connectivity first; it prunes most masks cheaply
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t nxt = 0;
      while (frontier) {
        int v = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        nxt |= nb[v] & ~seen;
      }
      seen |= nxt;
      frontier = nxt;
    }
    if (seen != (std::uint32_t(1) << n) - 1) continue;
    reps.insert(canon.canonical(nb));
  }

  std::vector<Graph> out;
  for (std::uint32_t mask : reps) {
    std::vector<std::pair<int, int>> edges;
    int e = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++e)
        if (mask & (std::uint32_t(1) << e)) edges.emplace_back(i, j);
    out.push_back(from_edges(n, edges));
  }
  return out;
}

}  // namespace mw
