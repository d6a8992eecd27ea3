#include "mw/coloring.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "mw/errors.hpp"
#include "mw/ilp.hpp"

namespace mw {

namespace {

// Compare bitmasks as ascending vertex sequences.
bool lex_less_mask(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  std::uint32_t d = (a ^ b) & -(a ^ b);
  if (b & d) return (a & ~(d - 1)) == 0;  // a is a strict prefix of b
  return (b & ~(d - 1)) != 0;
}

void validate_problem(const WeightedPartitionProblem& p) {
  if (p.n < 1) throw std::invalid_argument("partition: ground set must be nonempty");
  if (p.n > p.limit)
    throw capacity_error("partition: ground set larger than cap of " +
                         std::to_string(p.limit));
  if (p.k < 1) throw std::invalid_argument("partition: k must be positive");
  if (p.cost.size() != (std::size_t(1) << p.n))
    throw std::invalid_argument("partition: cost table must have 2^n entries");
  if (!p.usable.empty() && p.usable.size() != p.cost.size())
    throw std::invalid_argument("partition: usable mask size mismatch");
}

bool block_ok(const WeightedPartitionProblem& p, std::uint32_t s) {
  return p.usable.empty() || p.usable[s];
}

}  // namespace

PartitionResult max_weighted_partition(const WeightedPartitionProblem& p) {
  validate_problem(p);
  const std::uint32_t full = (std::uint32_t(1) << p.n) - 1;
  const long long NEG = LLONG_MIN / 4;
  int layers = std::min(p.k, p.n);

  std::vector<long long> prev(full + 1, NEG), cur;
  prev[0] = 0;
  std::vector<std::vector<std::uint32_t>> pick(
      layers + 1, std::vector<std::uint32_t>(full + 1, 0));
  for (int j = 1; j <= layers; ++j) {
    cur = prev;  // carrying over means this layer's block stays empty
    for (std::uint32_t s = 1; s <= full; ++s) {
      std::uint32_t lowbit = s & -s;
      // submasks in decreasing numeric order; only blocks holding the lowest
      // element, so each partition is enumerated once
      for (std::uint32_t t = s;; t = (t - 1) & s) {
        if ((t & lowbit) && block_ok(p, t) && prev[s ^ t] != NEG) {
          long long val = p.cost[t] + prev[s ^ t];
          if (val > cur[s] ||
              (val == cur[s] && pick[j][s] != 0 && lex_less_mask(t, pick[j][s]))) {
            cur[s] = val;
            pick[j][s] = t;
          }
        }
        if (t == 0) break;
      }
    }
    prev.swap(cur);
  }
  if (prev[full] <= NEG / 2)
    throw std::invalid_argument("partition: no admissible partition exists");

  PartitionResult res;
  res.value = prev[full];
  std::uint32_t s = full;
  for (int j = layers; j >= 1 && s; --j) {
    std::uint32_t t = pick[j][s];
    if (t == 0) continue;  // layer unused
    res.blocks.push_back(t);
    s ^= t;
  }
  if (s != 0) throw std::logic_error("partition: reconstruction failed");
  std::sort(res.blocks.begin(), res.blocks.end(), lex_less_mask);
  return res;
}

long long max_weighted_partition_value_fast(const WeightedPartitionProblem& p) {
  validate_problem(p);
  const int n = p.n;
  const int k = std::min(p.k, p.n);
  if ((double)n * std::log2((double)std::max(k, 2)) >= 63.0)
    throw capacity_error("partition: k^n exceeds exact counting range");

  long long m = 1;  // max |cost| over admissible nonempty blocks
  const std::size_t words = std::size_t(1) << n;
  for (std::size_t s = 1; s < words; ++s)
    if (block_ok(p, (std::uint32_t)s)) m = std::max(m, std::llabs(p.cost[s]));
  const long long span = 2 * m + 1;       // per-block weight offsets
  const long long tspan = 2 * k * m + 1;  // total weight offsets
  if ((double)k * (n + 1) * (double)tspan * (double)(n + 1) * (double)span *
          (double)words >
      6e10)
    throw capacity_error("partition: counting table too large for fast path");

  // Z[r][w][X] = #admissible subsets S of X with |S| = r >= 1 and
  // cost(S) = w - m, via a subset zeta transform per (r, w) layer. Counting
  // runs mod 2^64, which is exact because the final counts stay below k^n.
  auto idx = [&](int r, long long w) { return (std::size_t)r * span + w; };
  std::vector<std::vector<std::uint64_t>> Z((std::size_t)(n + 1) * span);
  for (std::size_t s = 1; s < words; ++s) {
    if (!block_ok(p, (std::uint32_t)s)) continue;
    int r = __builtin_popcountll(s);
    auto& layer = Z[idx(r, p.cost[s] + m)];
    if (layer.empty()) layer.assign(words, 0);
    layer[s] += 1;
  }
  for (auto& layer : Z) {
    if (layer.empty()) continue;
    for (int b = 0; b < n; ++b)
      for (std::size_t s = 0; s < words; ++s)
        if (s & (std::size_t(1) << b)) layer[s] += layer[s ^ (std::size_t(1) << b)];
  }

  struct Term {
    int rank;
    long long w;  // true block cost
    std::size_t layer;
  };
  std::vector<Term> terms;
  for (int r = 1; r <= n; ++r)
    for (long long w = 0; w < span; ++w)
      if (!Z[idx(r, w)].empty()) terms.push_back({r, w - m, idx(r, w)});

  // Per X, acc[r][w] tallies ordered tuples of admissible blocks inside X by
  // total size and total weight; rank == n at the end forces disjointness,
  // and inclusion-exclusion over X forces the union to be the ground set.
  std::vector<std::uint64_t> result((std::size_t)tspan, 0);
  std::vector<std::uint64_t> acc((std::size_t)(n + 1) * tspan);
  std::vector<std::uint64_t> nxt((std::size_t)(n + 1) * tspan);
  auto tidx = [&](int r, long long w) { return (std::size_t)r * tspan + w; };

  for (std::size_t X = 0; X < words; ++X) {
    std::fill(acc.begin(), acc.end(), 0);
    acc[tidx(0, k * m)] = 1;  // offset origin: total weight 0
    for (int step = 0; step < k; ++step) {
      std::fill(nxt.begin(), nxt.end(), 0);
      long long wlo = k * m - (long long)step * m;
      long long whi = k * m + (long long)step * m;
      for (int r = 0; r <= n; ++r)
        for (long long w = wlo; w <= whi; ++w) {
          std::uint64_t c = acc[tidx(r, w)];
          if (!c) continue;
          nxt[tidx(r, w)] += c;  // this slot's block stays empty
          for (const Term& t : terms) {
            if (t.rank + r > n) continue;
            std::uint64_t z = Z[t.layer][X];
            if (z) nxt[tidx(r + t.rank, w + t.w)] += c * z;
          }
        }
      acc.swap(nxt);
    }
    bool odd = ((n - __builtin_popcountll(X)) & 1) != 0;
    for (long long w = 0; w < tspan; ++w) {
      std::uint64_t c = acc[tidx(n, w)];
      if (odd)
        result[w] -= c;
      else
        result[w] += c;
    }
  }

  for (long long w = tspan - 1; w >= 0; --w)
    if (result[w] != 0) return w - (long long)k * m;
  throw std::invalid_argument("partition: no admissible partition exists");
}

namespace {

// Cost table for the partition bound: independent quotient subsets cost
// minus the widest child palette; dependent subsets get a sentinel no
// optimum can afford, and are excluded outright.
WeightedPartitionProblem substitution_problem(const Graph& quotient,
                                              const std::vector<int>& child_chi,
                                              int limit) {
  int n = quotient.n;
  std::vector<std::uint32_t> nb(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : quotient.adj[u]) nb[u] |= std::uint32_t(1) << v;
  long long total = 0;
  for (int c : child_chi) total += c;
  const long long sentinel = -(1 + total);

  WeightedPartitionProblem p;
  p.n = n;
  p.k = n;
  p.limit = limit;
  p.cost.assign(std::size_t(1) << n, 0);
  p.usable.assign(std::size_t(1) << n, 1);
  std::vector<int> top(std::size_t(1) << n, 0);
  for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
    int v = __builtin_ctz(s);
    std::uint32_t rest = s & (s - 1);
    p.usable[s] = p.usable[rest] && !(nb[v] & rest);
    top[s] = std::max(child_chi[v], top[rest]);
    p.cost[s] = p.usable[s] ? -(long long)top[s] : sentinel;
  }
  return p;
}

// Structure of the quotient used by the palette-cover search.
struct QuotientSets {
  std::vector<std::uint32_t> mis;      // maximal independent sets
  std::vector<std::uint32_t> cliques;  // maximal cliques
};

QuotientSets quotient_sets(const Graph& quotient) {
  int n = quotient.n;
  std::vector<std::uint32_t> nb(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v : quotient.adj[u]) nb[u] |= std::uint32_t(1) << v;
  const std::uint32_t words = std::uint32_t(1) << n;
  QuotientSets qs;
  std::vector<char> indep(words, 1);
  std::vector<char> clique(words, 1);
  for (std::uint32_t s = 1; s < words; ++s) {
    int v = __builtin_ctz(s);
    std::uint32_t rest = s & (s - 1);
    indep[s] = indep[rest] && !(nb[v] & rest);
    clique[s] = clique[rest] && ((nb[v] & rest) == rest);
  }
  auto maximal = [&](const std::vector<char>& good, std::vector<std::uint32_t>& out) {
    for (std::uint32_t s = 1; s < words; ++s) {
      if (!good[s]) continue;
      bool max = true;
      for (int v = 0; v < n && max; ++v)
        if (!(s & (std::uint32_t(1) << v)) && good[s | (std::uint32_t(1) << v)])
          max = false;
      if (max) out.push_back(s);
    }
  };
  maximal(indep, qs.mis);
  maximal(clique, qs.cliques);
  // wide sets first so the search closes demands early
  std::sort(qs.mis.begin(), qs.mis.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  return qs;
}

// How many colors take each maximal independent set as their class, so that
// every vertex v collects at least child_chi[v] colors out of `colors`
// total. One multiplicity variable per set; clique aggregates (a set meets
// a clique at most once) sharpen propagation.
std::optional<std::vector<long long>> palette_cover(
    const QuotientSets& qs, int n, const std::vector<int>& child_chi,
    long long colors) {
  IlpInstance inst;
  for (std::uint32_t I : qs.mis) {
    long long top = 0;
    for (std::uint32_t s = I; s; s &= s - 1)
      top = std::max(top, (long long)child_chi[__builtin_ctz(s)]);
    inst.add_var(0, std::min(colors, top));
  }
  LinCon total;
  total.coeff.assign(inst.p, 1);
  total.rel = Rel::Eq;
  total.rhs = colors;
  inst.cons.push_back(std::move(total));
  auto demand = [&](std::uint32_t members, std::uint32_t charge) {
    LinCon c;
    c.coeff.assign(inst.p, 0);
    for (int j = 0; j < inst.p; ++j)
      if (qs.mis[j] & members) c.coeff[j] = 1;
    c.rel = Rel::Ge;
    c.rhs = 0;
    for (std::uint32_t s = charge; s; s &= s - 1)
      c.rhs += child_chi[__builtin_ctz(s)];
    inst.cons.push_back(std::move(c));
  };
  for (int v = 0; v < n; ++v)
    demand(std::uint32_t(1) << v, std::uint32_t(1) << v);
  for (std::uint32_t K : qs.cliques) demand(K, K);
  return feasible(inst);
}

long long clique_demand_bound(const QuotientSets& qs,
                              const std::vector<int>& child_chi) {
  long long best = 0;
  for (std::uint32_t K : qs.cliques) {
    long long w = 0;
    for (std::uint32_t s = K; s; s &= s - 1) w += child_chi[__builtin_ctz(s)];
    best = std::max(best, w);
  }
  return best;
}

}  // namespace

// The quotient partition that minimizes the summed palette widths only
// bounds chi from above: a child needing several colors may spread them
// over classes holding different neighbors. The exact value is the fewest
// independent sets of the quotient covering each vertex chi_i times, found
// between the clique lower bound and the partition upper bound.
int chromatic_of_substitution(const Graph& quotient,
                              const std::vector<int>& child_chi,
                              const ColorOptions& opt) {
  if ((int)child_chi.size() != quotient.n)
    throw std::invalid_argument("chromatic_of_substitution: arity mismatch");
  for (int c : child_chi)
    if (c < 1)
      throw std::invalid_argument("chromatic_of_substitution: child chi < 1");
  if (quotient.n == 1) return child_chi[0];
  if (quotient.n > opt.mwp_limit)
    throw capacity_error("chromatic_of_substitution: quotient above cap");

  auto p = substitution_problem(quotient, child_chi, opt.mwp_limit);
  long long ub = -(opt.fast_mwp ? max_weighted_partition_value_fast(p)
                                : max_weighted_partition(p).value);
  QuotientSets qs = quotient_sets(quotient);
  long long lo = clique_demand_bound(qs, child_chi);
  long long hi = ub;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (palette_cover(qs, quotient.n, child_chi, mid).has_value())
      hi = mid;
    else
      lo = mid + 1;
  }
  return (int)lo;
}

namespace {

std::vector<int> chi_per_node(const ParseTree& t, const ColorOptions& opt) {
  std::vector<int> chi(t.nodes.size(), 0);
  // nodes are created children-first, so a forward sweep is bottom-up
  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    const auto& node = t.nodes[id];
    if (node.kind == NodeKind::Leaf) {
      chi[id] = 1;
    } else if (node.kind == NodeKind::Prime) {
      std::vector<int> child;
      for (int c : node.children) child.push_back(chi[c]);
      chi[id] = chromatic_of_substitution(node.quotient, child, opt);
    } else {
      throw std::logic_error("coloring: tree must be normalized first");
    }
  }
  return chi;
}

// Assign the palette (a list of chi[id] global colors) down the subtree.
// Each color slot carries the independent set that may use it; a child
// takes its lowest chi eligible slots. At the optimum every slot ends up
// used, otherwise dropping it would beat the computed chromatic number.
void paint(const ParseTree& t, int id, const std::vector<int>& chi,
           const std::vector<int>& palette, std::vector<int>& color,
           const ColorOptions& opt) {
  const auto& node = t.at(id);
  if (node.kind == NodeKind::Leaf) {
    color[node.vertex] = palette[0];
    return;
  }
  std::vector<int> child_chi;
  for (int c : node.children) child_chi.push_back(chi[c]);
  if (node.quotient.n == 1) {
    paint(t, node.children[0], chi, palette, color, opt);
    return;
  }
  QuotientSets qs = quotient_sets(node.quotient);
  auto mult = palette_cover(qs, node.quotient.n, child_chi, chi[id]);
  if (!mult) throw std::logic_error("coloring: cover missing at the optimum");
  std::vector<std::uint32_t> slot_set;  // color slot -> its independent set
  for (std::size_t j = 0; j < qs.mis.size(); ++j)
    for (long long r = 0; r < (*mult)[j]; ++r) slot_set.push_back(qs.mis[j]);
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    std::vector<int> sub;
    for (std::size_t s = 0; s < slot_set.size() && (int)sub.size() < child_chi[i];
         ++s)
      if (slot_set[s] & (std::uint32_t(1) << i)) sub.push_back(palette[s]);
    if ((int)sub.size() != child_chi[i])
      throw std::logic_error("coloring: cover left a child short of colors");
    paint(t, node.children[i], chi, sub, color, opt);
  }
}

}  // namespace

int chromatic_number(const Graph& g, const ColorOptions& opt) {
  if (g.n < 1)
    throw std::invalid_argument("chromatic_number: graph must be nonempty");
  ParseTree t = normalize(modular_decomposition(g));
  return chi_per_node(t, opt)[t.root];
}

ColoringWitness coloring_witness(const Graph& g, const ColorOptions& opt) {
  if (g.n < 1)
    throw std::invalid_argument("coloring_witness: graph must be nonempty");
  ParseTree t = normalize(modular_decomposition(g));
  auto chi = chi_per_node(t, opt);
  ColoringWitness w;
  w.color.assign(g.n, -1);
  std::vector<int> palette(chi[t.root]);
  std::iota(palette.begin(), palette.end(), 0);
  paint(t, t.root, chi, palette, w.color, opt);
  w.colors_used = chi[t.root];
  return w;
}

}  // namespace mw
