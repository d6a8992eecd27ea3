#include "mw/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mw/errors.hpp"

namespace mw::oracles {

namespace {

void check_cap(const Graph& g, int cap, const char* who) {
  if (g.n > cap)
    throw capacity_error(std::string(who) + ": graph larger than cap of " +
                         std::to_string(cap));
}

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) nb[u] |= 1u << v;
  return nb;
}

}  // namespace

bool held_karp_hamiltonian(const Graph& g, bool allow_degenerate, int cap) {
  check_cap(g, std::min(cap, 25), "held_karp_hamiltonian");
  int n = g.n;
  if (n == 0) return false;
  if (n == 1) return allow_degenerate;
  if (n == 2) return allow_degenerate && g.has_edge(0, 1);
  auto nb = neighbor_masks(g);
  // reach[mask] = endpoints v of paths that start at 0 and cover mask
  std::vector<std::uint32_t> reach(std::size_t(1) << n, 0);
  reach[1] = 1;
  std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends || !(mask & 1)) continue;
    std::uint32_t e = ends;
    while (e) {
      int v = __builtin_ctz(e);
      e &= e - 1;
      std::uint32_t ext = nb[v] & ~mask;
      while (ext) {
        int w = __builtin_ctz(ext);
        ext &= ext - 1;
        reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  std::uint32_t closers = reach[full] & nb[0] & ~1u;
  return closers != 0;
}

int brute_path_partition(const Graph& g, int cap) {
  check_cap(g, std::min(cap, 16), "brute_path_partition");
  int n = g.n;
  if (n == 0) return 0;
  auto nb = neighbor_masks(g);
  const int INF = n + 1;
  // f[mask][v]: fewest paths covering mask, current path open at v
  std::vector<std::vector<int>> f(std::size_t(1) << n, std::vector<int>(n, INF));
  for (int v = 0; v < n; ++v) f[1u << v][v] = 1;
  std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (int v = 0; v < n; ++v) {
      int cur = f[mask][v];
      if (cur >= INF) continue;
      std::uint32_t rest = ~mask & full;
      std::uint32_t grow = nb[v] & rest;
      while (grow) {
        int w = __builtin_ctz(grow);
        grow &= grow - 1;
        int& slot = f[mask | (1u << w)][w];
        if (cur < slot) slot = cur;
      }
      while (rest) {
        int w = __builtin_ctz(rest);
        rest &= rest - 1;
        int& slot = f[mask | (1u << w)][w];
        if (cur + 1 < slot) slot = cur + 1;
      }
    }
  }
  int best = INF;
  for (int v = 0; v < n; ++v) best = std::min(best, f[full][v]);
  return best;
}

namespace {

bool colorable(const Graph& g, const std::vector<int>& order, int c,
               std::vector<int>& color, int idx, int used) {
  if (idx == g.n) return true;
  int v = order[idx];
  int limit = std::min(c, used + 1);
  for (int col = 0; col < limit; ++col) {
    bool ok = true;
    for (int w : g.adj[v])
      if (color[w] == col) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = col;
    if (colorable(g, order, c, color, idx + 1, std::max(used, col + 1)))
      return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

int brute_chromatic(const Graph& g, int cap) {
  check_cap(g, cap, "brute_chromatic");
  int n = g.n;
  if (n == 0) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int c = 1; c <= n; ++c) {
    std::vector<int> color(n, -1);
    if (colorable(g, order, c, color, 0, 0)) return c;
  }
  return n;
}

namespace {

bool is_module_mask(const std::vector<std::uint32_t>& nb, int n,
                    std::uint32_t s) {
  for (int w = 0; w < n; ++w) {
    if (s & (1u << w)) continue;
    std::uint32_t inter = nb[w] & s;
    if (inter != 0 && inter != s) return false;
  }
  return true;
}

std::vector<std::uint32_t> mask_components(const std::vector<std::uint32_t>& nb,
                                           std::uint32_t verts) {
  std::vector<std::uint32_t> comps;
  std::uint32_t left = verts;
  while (left) {
    std::uint32_t comp = left & (-left);
    while (true) {
      std::uint32_t grow = 0;
      std::uint32_t c = comp;
      while (c) {
        int v = __builtin_ctz(c);
        c &= c - 1;
        grow |= nb[v] & verts;
      }
      grow |= comp;
      if (grow == comp) break;
      comp = grow;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

int brute_mw_rec(const Graph& g) {
  int n = g.n;
  if (n <= 1) return 0;
  auto nb = neighbor_masks(g);
  std::uint32_t full = (1u << n) - 1;

  auto recurse_into = [&](const std::vector<std::uint32_t>& parts) {
    int best = 0;
    for (std::uint32_t p : parts) {
      VertexSet s;
      for (int v = 0; v < n; ++v)
        if (p & (1u << v)) s.push_back(v);
      best = std::max(best, brute_mw_rec(induced_subgraph(g, s)));
    }
    return best;
  };

  auto comps = mask_components(nb, full);
  if (comps.size() > 1) return recurse_into(comps);
  auto conb = neighbor_masks(complement(g));
  auto cocomps = mask_components(conb, full);
  if (cocomps.size() > 1) return recurse_into(cocomps);

  // prime: collect proper modules, keep the strong ones, take the maximal
  std::vector<std::uint32_t> modules;
  for (std::uint32_t s = 1; s < full; ++s)
    if (is_module_mask(nb, n, s)) modules.push_back(s);
  std::vector<std::uint32_t> strong;
  for (std::uint32_t a : modules) {
    bool overlapped = false;
    for (std::uint32_t b : modules) {
      if ((a & b) && (a & ~b) && (b & ~a)) {
        overlapped = true;
        break;
      }
    }
    if (!overlapped) strong.push_back(a);
  }
  std::vector<std::uint32_t> parts;
  for (std::uint32_t a : strong) {
    bool maximal = true;
    for (std::uint32_t b : strong)
      if (a != b && (a & ~b) == 0) {
        maximal = false;
        break;
      }
    if (maximal) parts.push_back(a);
  }
  std::uint32_t covered = 0;
  for (std::uint32_t p : parts) covered |= p;
  if (covered != full) throw std::logic_error("strong modules do not cover");
  return std::max((int)parts.size(), recurse_into(parts));
}

}  // namespace

int brute_modular_width(const Graph& g, int cap) {
  check_cap(g, std::min(cap, 16), "brute_modular_width");
  if (g.n == 0) return 0;
  return brute_mw_rec(g);
}

bool validate_coloring(const Graph& g, const std::vector<int>& color,
                       int claimed_colors) {
  if ((int)color.size() != g.n) return false;
  std::vector<bool> seen(claimed_colors, false);
  for (int v = 0; v < g.n; ++v) {
    if (color[v] < 0 || color[v] >= claimed_colors) return false;
    seen[color[v]] = true;
    for (int w : g.adj[v])
      if (color[w] == color[v]) return false;
  }
  for (bool b : seen)
    if (!b) return false;
  return true;
}

bool validate_path_partition(const Graph& g,
                             const std::vector<std::vector<int>>& paths) {
  std::vector<bool> seen(g.n, false);
  int covered = 0;
  for (const auto& p : paths) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      int v = p[i];
      if (v < 0 || v >= g.n || seen[v]) return false;
      seen[v] = true;
      ++covered;
      if (i > 0 && !g.has_edge(p[i - 1], v)) return false;
    }
  }
  return covered == g.n;
}

bool validate_cycle(const Graph& g, const std::vector<int>& cycle) {
  if ((int)cycle.size() != g.n || g.n < 3) return false;
  std::vector<bool> seen(g.n, false);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int v = cycle[i];
    if (v < 0 || v >= g.n || seen[v]) return false;
    seen[v] = true;
    if (!g.has_edge(v, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

}  // namespace mw::oracles
