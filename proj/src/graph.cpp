#include "mw/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mw/errors.hpp"

namespace mw {

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

long long Graph::edge_count() const {
  long long d = 0;
  for (const auto& a : adj) d += (long long)a.size();
  return d / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph make_empty(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  return g;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g = make_empty(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

void check_invariants(const Graph& g) {
  if ((int)g.adj.size() != g.n) throw std::logic_error("adjacency size mismatch");
  for (int u = 0; u < g.n; ++u) {
    const auto& a = g.adj[u];
    if (!std::is_sorted(a.begin(), a.end()))
      throw std::logic_error("adjacency list not sorted");
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw std::logic_error("duplicate neighbor");
    for (int v : a) {
      if (v < 0 || v >= g.n) throw std::logic_error("neighbor out of range");
      if (v == u) throw std::logic_error("self-loop");
      if (!g.has_edge(v, u)) throw std::logic_error("adjacency not symmetric");
    }
  }
}

Graph complement(const Graph& g) {
  Graph c = make_empty(g.n);
  for (int u = 0; u < g.n; ++u) {
    const auto& a = g.adj[u];
    std::size_t k = 0;
    for (int v = 0; v < g.n; ++v) {
      if (k < a.size() && a[k] == v) {
        ++k;
        continue;
      }
      if (v != u) c.adj[u].push_back(v);
    }
  }
  return c;
}

Graph substitute(const Graph& quotient, const std::vector<Graph>& parts) {
  if ((int)parts.size() != quotient.n)
    throw std::invalid_argument("substitute: expected one part per quotient vertex");
  std::vector<int> offset(quotient.n + 1, 0);
  for (int i = 0; i < quotient.n; ++i) {
    if (parts[i].n == 0)
      throw std::invalid_argument("substitute: parts must be nonempty");
    offset[i + 1] = offset[i] + parts[i].n;
  }
  Graph h = make_empty(offset.back());
  for (int i = 0; i < quotient.n; ++i) {
    const Graph& p = parts[i];
    const auto& qi = quotient.adj[i];
    for (int u = 0; u < p.n; ++u) {
      auto& row = h.adj[offset[i] + u];
      std::size_t k = 0;
      // neighbor blocks below i, own internal edges, neighbor blocks above i;
      // block offsets ascend with the quotient index, so the row stays sorted
      for (; k < qi.size() && qi[k] < i; ++k)
        for (int w = 0; w < parts[qi[k]].n; ++w) row.push_back(offset[qi[k]] + w);
      for (int w : p.adj[u]) row.push_back(offset[i] + w);
      for (; k < qi.size(); ++k)
        for (int w = 0; w < parts[qi[k]].n; ++w) row.push_back(offset[qi[k]] + w);
    }
  }
  return h;
}

Graph add_universal(const Graph& g, int count) {
  if (count < 0) throw std::invalid_argument("add_universal: count must be >= 0");
  Graph h = make_empty(g.n + count);
  for (int u = 0; u < g.n; ++u) {
    h.adj[u] = g.adj[u];
    for (int t = 0; t < count; ++t) h.adj[u].push_back(g.n + t);
  }
  for (int t = 0; t < count; ++t) {
    auto& row = h.adj[g.n + t];
    for (int u = 0; u < g.n; ++u) row.push_back(u);
  }
  return h;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  VertexSet verts = s;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("induced_subgraph: vertex out of range: " +
                                  std::to_string(v));
  std::vector<int> local(g.n, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = (int)i;
  Graph h = make_empty((int)verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (int w : g.adj[verts[i]])
      if (local[w] >= 0) h.adj[i].push_back(local[w]);
  }
  return h;
}

}  // namespace mw
