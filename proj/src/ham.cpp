#include "mw/ham.hpp"

#include <algorithm>
#include <stdexcept>

#include "mw/errors.hpp"

namespace mw {

long long FlowMultigraph::out_degree(int v) const {
  long long d = 0;
  for (int j = 0; j < n; ++j) d += mult[v][j];
  return d;
}

long long FlowMultigraph::in_degree(int v) const {
  long long d = 0;
  for (int i = 0; i < n; ++i) d += mult[i][v];
  return d;
}

bool FlowMultigraph::balanced() const {
  for (int v = 0; v < n; ++v)
    if (out_degree(v) != in_degree(v)) return false;
  return true;
}

bool FlowMultigraph::support_connected() const {
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (mult[u][v] > 0 || mult[v][u] > 0)) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n;
}

namespace {

struct ArcVars {
  // var index per ordered pair across a quotient edge, -1 otherwise
  std::vector<std::vector<int>> id;
  std::vector<Arc> arcs;  // arcs[v] = ordered pair of variable v
};

// Variables ordered by ascending capacity, ties by endpoint pair; the
// solver branches in index order, so scarce arcs get settled first.
ArcVars arc_vars(const Graph& quotient, const std::vector<NodeRecord>& records) {
  std::vector<std::pair<int, int>> edges = quotient.edges();
  std::stable_sort(edges.begin(), edges.end(),
                   [&](const auto& a, const auto& b) {
                     long long ca = std::min(records[a.first].size,
                                             records[a.second].size);
                     long long cb = std::min(records[b.first].size,
                                             records[b.second].size);
                     return ca < cb;
                   });
  ArcVars av;
  av.id.assign(quotient.n, std::vector<int>(quotient.n, -1));
  for (auto [i, j] : edges) {
    av.id[i][j] = (int)av.arcs.size();
    av.arcs.emplace_back(i, j);
    av.id[j][i] = (int)av.arcs.size();
    av.arcs.emplace_back(j, i);
  }
  return av;
}

LinCon cut_for(const ArcVars& av, const std::vector<char>& in_a) {
  LinCon c;
  c.coeff.assign(av.arcs.size(), 0);
  for (std::size_t v = 0; v < av.arcs.size(); ++v) {
    auto [i, j] = av.arcs[v];
    if (in_a[i] != in_a[j]) c.coeff[v] = 1;
  }
  c.rel = Rel::Ge;
  c.rhs = 1;
  return c;
}

void validate_records(const Graph& quotient,
                      const std::vector<NodeRecord>& records) {
  if ((int)records.size() != quotient.n)
    throw std::invalid_argument("ham: expected one record per quotient vertex");
  for (const auto& r : records)
    if (r.ham < 1 || r.ham > r.size)
      throw std::invalid_argument("ham: record must satisfy 1 <= ham <= size");
}

}  // namespace

IlpInstance build_ham_ilp(const Graph& quotient,
                          const std::vector<NodeRecord>& records,
                          bool eager_cuts) {
  validate_records(quotient, records);
  const int n = quotient.n;
  ArcVars av = arc_vars(quotient, records);

  IlpInstance inst;
  for (auto [i, j] : av.arcs)
    inst.add_var(0, std::min(records[i].size, records[j].size));

  for (int i = 0; i < n; ++i) {
    LinCon balance, cap, need;
    balance.coeff.assign(inst.p, 0);
    cap.coeff.assign(inst.p, 0);
    need.coeff.assign(inst.p, 0);
    for (int j : quotient.adj[i]) {
      balance.coeff[av.id[i][j]] += 1;
      balance.coeff[av.id[j][i]] -= 1;
      cap.coeff[av.id[i][j]] = 1;
      need.coeff[av.id[i][j]] = 1;
    }
    balance.rel = Rel::Eq;
    balance.rhs = 0;
    cap.rel = Rel::Le;
    cap.rhs = records[i].size;
    need.rel = Rel::Ge;
    need.rhs = records[i].ham;
    inst.cons.push_back(std::move(balance));
    inst.cons.push_back(std::move(cap));
    inst.cons.push_back(std::move(need));
  }

  if (eager_cuts) {
    if (n > 24) throw capacity_error("ham: too many blocks for eager cuts");
    // one side of each bipartition contains vertex 0, deduplicating complements
    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    for (std::uint64_t mask = 1; mask < full; mask += 2) {
      std::vector<char> in_a(n, 0);
      for (int v = 0; v < n; ++v)
        if (mask & (std::uint64_t(1) << v)) in_a[v] = 1;
      inst.cons.push_back(cut_for(av, in_a));
    }
  } else {
    inst.lazy_cuts = [av, n](const std::vector<long long>& x) {
      std::vector<bool> seen(n, false);
      std::vector<int> stack{0};
      seen[0] = true;
      int reached = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
          if (seen[v]) continue;
          int uv = av.id[u][v], vu = av.id[v][u];
          bool active = (uv >= 0 && x[uv] > 0) || (vu >= 0 && x[vu] > 0);
          if (active) {
            seen[v] = true;
            ++reached;
            stack.push_back(v);
          }
        }
      }
      if (reached == n) return std::vector<LinCon>{};
      std::vector<char> in_a(n, 0);
      for (int v = 0; v < n; ++v) in_a[v] = seen[v];
      return std::vector<LinCon>{cut_for(av, in_a)};
    };
  }
  return inst;
}

std::optional<FlowMultigraph> has_ham_cycle_product(
    const Graph& quotient, const std::vector<NodeRecord>& records,
    const HamOptions& opt) {
  IlpInstance inst = build_ham_ilp(quotient, records, opt.eager_cuts);
  inst.node_budget = opt.node_budget;
  // Parsimonious witnesses keep arc multiplicities near the path demands,
  // so try a capped box first; a hit there is sound, and only a capped miss
  // pays for the full-range search.
  long long cap = quotient.n + 1;
  for (const auto& r : records) cap += r.ham;
  bool loose = false;
  for (int j = 0; j < inst.p; ++j) loose = loose || inst.upper[j] > cap;
  std::optional<std::vector<long long>> sol;
  if (loose) {
    IlpInstance tight = inst;
    for (auto& u : tight.upper) u = std::min(u, cap);
    sol = feasible(tight);
  }
  if (!sol) sol = feasible(inst);
  if (!sol) return std::nullopt;
  FlowMultigraph fm;
  fm.n = quotient.n;
  fm.mult.assign(fm.n, std::vector<long long>(fm.n, 0));
  ArcVars av = arc_vars(quotient, records);
  for (std::size_t v = 0; v < av.arcs.size(); ++v)
    fm.mult[av.arcs[v].first][av.arcs[v].second] = (*sol)[v];
  if (!fm.balanced() || !fm.support_connected())
    throw std::logic_error("ham: solver returned an invalid flow");
  return fm;
}

NodeRecord ham_of_product(const Graph& quotient,
                          const std::vector<NodeRecord>& records,
                          const HamOptions& opt) {
  validate_records(quotient, records);
  long long total = 0;
  for (const auto& r : records) total += r.size;
  Graph extended = add_universal(quotient, 1);

  auto cycle_with = [&](long long l) {
    auto recs = records;
    recs.push_back({l, l});
    return has_ham_cycle_product(extended, recs, opt).has_value();
  };

  long long best;
  if (opt.linear_scan) {
    best = total;
    for (long long l = 1; l <= total; ++l)
      if (cycle_with(l)) {
        best = l;
        break;
      }
  } else {
    // gallop up from 1, then bisect the last gap; probes stay close to the
    // answer, where infeasible instances die by counting propagation
    long long lo = 1, hi = total;  // `total` always feasible: one path per vertex
    for (long long step = 1; lo + step < hi; step *= 2) {
      if (cycle_with(lo + step - 1)) {
        hi = lo + step - 1;
        break;
      }
      lo = lo + step;
    }
    while (lo < hi) {
      long long mid = lo + (hi - lo) / 2;
      if (cycle_with(mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    best = lo;
  }
  return {best, total};
}

namespace {

struct HamDp {
  ParseTree tree;
  std::vector<NodeRecord> rec;
};

HamDp ham_records(const Graph& g, const HamOptions& opt) {
  HamDp dp;
  dp.tree = normalize(modular_decomposition(g));
  dp.rec.assign(dp.tree.nodes.size(), {});
  for (std::size_t id = 0; id < dp.tree.nodes.size(); ++id) {
    const auto& node = dp.tree.nodes[id];
    if (node.kind == NodeKind::Leaf) {
      dp.rec[id] = {1, 1};
    } else if (node.kind == NodeKind::Prime) {
      std::vector<NodeRecord> child;
      for (int c : node.children) child.push_back(dp.rec[c]);
      dp.rec[id] = ham_of_product(node.quotient, child, opt);
    } else {
      throw std::logic_error("ham: tree must be normalized first");
    }
  }
  return dp;
}

}  // namespace

long long ham_number(const Graph& g, const HamOptions& opt) {
  if (g.n < 1) throw std::invalid_argument("ham_number: graph must be nonempty");
  HamDp dp = ham_records(g, opt);
  return dp.rec[dp.tree.root].ham;
}

bool hamiltonian_path(const Graph& g, const HamOptions& opt) {
  return ham_number(g, opt) == 1;
}

bool hamiltonian_cycle(const Graph& g, const HamOptions& opt) {
  if (g.n < 1)
    throw std::invalid_argument("hamiltonian_cycle: graph must be nonempty");
  if (g.n < 3) return false;
  HamDp dp = ham_records(g, opt);
  const auto& root = dp.tree.at(dp.tree.root);
  std::vector<NodeRecord> child;
  for (int c : root.children) child.push_back(dp.rec[c]);
  return has_ham_cycle_product(root.quotient, child, opt).has_value();
}

std::vector<Arc> eulerian_tour(const FlowMultigraph& m, int start) {
  long long arcs_total = 0;
  for (int v = 0; v < m.n; ++v)
    for (int w = 0; w < m.n; ++w) {
      if (m.mult[v][w] < 0)
        throw std::logic_error("eulerian_tour: negative multiplicity");
      arcs_total += m.mult[v][w];
    }
  if (arcs_total == 0) return {};
  if (!m.balanced())
    throw std::logic_error("eulerian_tour: multigraph is not balanced");
  if (!m.support_connected())
    throw std::logic_error("eulerian_tour: support is disconnected");
  if (start < 0 || start >= m.n || m.out_degree(start) == 0)
    throw std::logic_error("eulerian_tour: start vertex has no arcs");

  std::vector<std::vector<int>> next(m.n);  // targets, ascending
  for (int v = 0; v < m.n; ++v)
    for (int w = 0; w < m.n; ++w)
      for (long long t = 0; t < m.mult[v][w]; ++t) next[v].push_back(w);
  std::vector<std::size_t> ptr(m.n, 0);

  std::vector<int> stack{start}, walk;
  while (!stack.empty()) {
    int v = stack.back();
    if (ptr[v] < next[v].size()) {
      stack.push_back(next[v][ptr[v]++]);
    } else {
      walk.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(walk.begin(), walk.end());
  if ((long long)walk.size() != arcs_total + 1)
    throw std::logic_error("eulerian_tour: arcs left over");
  std::vector<Arc> tour;
  tour.reserve(walk.size() - 1);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    tour.emplace_back(walk[i], walk[i + 1]);
  return tour;
}

std::vector<int> stitch_witness(const Graph& quotient,
                                const PathProvider& provider,
                                const FlowMultigraph& m) {
  if (quotient.n != m.n)
    throw std::invalid_argument("stitch_witness: flow/quotient size mismatch");
  int start = -1;
  for (int v = 0; v < m.n && start < 0; ++v)
    if (m.out_degree(v) > 0) start = v;
  if (start < 0) throw std::logic_error("stitch_witness: empty flow");
  auto tour = eulerian_tour(m, start);

  std::vector<std::vector<std::vector<int>>> paths(m.n);
  for (int v = 0; v < m.n; ++v) {
    long long want = m.out_degree(v);
    if (want == 0)
      throw std::logic_error("stitch_witness: block with no throughput");
    paths[v] = provider(v, want);
    if ((long long)paths[v].size() != want)
      throw std::logic_error("stitch_witness: provider returned wrong path count");
  }

  // Walk the tour: each entry into a block consumes its next path; the final
  // arc returns to the start block whose first path opened the cycle.
  std::vector<std::size_t> used(m.n, 0);
  std::vector<int> cycle = paths[start][0];
  used[start] = 1;
  for (std::size_t t = 0; t + 1 < tour.size(); ++t) {
    int into = tour[t].second;
    const auto& p = paths[into][used[into]++];
    cycle.insert(cycle.end(), p.begin(), p.end());
  }
  if (tour.back().second != start)
    throw std::logic_error("stitch_witness: tour does not close");
  return cycle;
}

namespace {

// Cut the last edge of the longest path until there are `want` of them.
std::vector<std::vector<int>> split_paths(std::vector<std::vector<int>> paths,
                                          long long want) {
  while ((long long)paths.size() < want) {
    std::size_t best = paths.size();
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (paths[i].size() >= 2 &&
          (best == paths.size() || paths[i].size() > paths[best].size()))
        best = i;
    if (best == paths.size())
      throw std::logic_error("split_paths: nothing left to split");
    int tail = paths[best].back();
    paths[best].pop_back();
    paths.push_back({tail});
  }
  return paths;
}

// Exactly `want` disjoint paths covering the subtree under `id`, built by
// stitching a cycle of the subtree's graph extended with `want` universal
// vertices and deleting them again.
std::vector<std::vector<int>> node_paths(const HamDp& dp, int id, long long want,
                                         int synth_base, const HamOptions& opt);

std::vector<std::vector<int>> node_ham_paths(const HamDp& dp, int id,
                                             int synth_base,
                                             const HamOptions& opt) {
  return node_paths(dp, id, dp.rec[id].ham, synth_base, opt);
}

std::vector<std::vector<int>> node_paths(const HamDp& dp, int id, long long want,
                                         int synth_base, const HamOptions& opt) {
  const auto& node = dp.tree.at(id);
  if (node.kind == NodeKind::Leaf) {
    if (want != 1) throw std::logic_error("node_paths: leaf wants one path");
    return {{node.vertex}};
  }
  const int k = (int)node.children.size();
  std::vector<NodeRecord> recs;
  for (int c : node.children) recs.push_back(dp.rec[c]);
  recs.push_back({want, want});
  Graph extended = add_universal(node.quotient, 1);
  auto flow = has_ham_cycle_product(extended, recs, opt);
  if (!flow) throw std::logic_error("node_paths: expected a feasible extension");

  PathProvider provider = [&](int child, long long p) {
    if (child == k) {
      std::vector<std::vector<int>> singles;
      for (long long t = 0; t < p; ++t) singles.push_back({synth_base + (int)t});
      return singles;
    }
    return split_paths(node_ham_paths(dp, node.children[child], synth_base, opt),
                       p);
  };
  auto cycle = stitch_witness(extended, provider, *flow);

  // deleting the universal block cuts the cycle into exactly `want` paths
  std::size_t first_synth = 0;
  while (cycle[first_synth] < synth_base) ++first_synth;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (std::size_t s = 1; s <= cycle.size(); ++s) {
    int v = cycle[(first_synth + s) % cycle.size()];
    if (v >= synth_base) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(v);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  if ((long long)out.size() != want)
    throw std::logic_error("node_paths: unexpected path count");
  return out;
}

}  // namespace

std::vector<std::vector<int>> path_partition_witness(const Graph& g,
                                                     const HamOptions& opt) {
  if (g.n < 1)
    throw std::invalid_argument("path_partition_witness: graph must be nonempty");
  HamDp dp = ham_records(g, opt);
  return node_ham_paths(dp, dp.tree.root, g.n, opt);
}

std::optional<std::vector<int>> hamiltonian_cycle_witness(const Graph& g,
                                                          const HamOptions& opt) {
  if (g.n < 3) return std::nullopt;
  HamDp dp = ham_records(g, opt);
  const auto& root = dp.tree.at(dp.tree.root);
  std::vector<NodeRecord> recs;
  for (int c : root.children) recs.push_back(dp.rec[c]);
  auto flow = has_ham_cycle_product(root.quotient, recs, opt);
  if (!flow) return std::nullopt;
  PathProvider provider = [&](int child, long long p) {
    return split_paths(node_ham_paths(dp, root.children[child], g.n, opt), p);
  };
  return stitch_witness(root.quotient, provider, *flow);
}

}  // namespace mw
