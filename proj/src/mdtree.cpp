#include "mw/mdtree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mw/bitset.hpp"

namespace mw {

int ParseTree::leaf_count() const {
  int c = 0;
  for (const auto& n : nodes)
    if (n.kind == NodeKind::Leaf) ++c;
  return c;
}

bool is_module(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("is_module: set must be nonempty");
  std::vector<bool> in(g.n, false);
  int inside = 0;
  for (int v : s) {
    if (v < 0 || v >= g.n)
      throw std::invalid_argument("is_module: vertex out of range");
    if (!in[v]) {
      in[v] = true;
      ++inside;
    }
  }
  for (int w = 0; w < g.n; ++w) {
    if (in[w]) continue;
    int hits = 0;
    for (int x : g.adj[w])
      if (in[x]) ++hits;
    if (hits != 0 && hits != inside) return false;
  }
  return true;
}

namespace {

// Subproblem view: bitset adjacency over local indices 0..n-1.
struct LocalGraph {
  int n = 0;
  std::vector<Bitset> adj;
};

LocalGraph local_from(const Graph& g) {
  LocalGraph L;
  L.n = g.n;
  L.adj.assign(g.n, Bitset(g.n));
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) L.adj[u].set(v);
  return L;
}

LocalGraph induce_local(const LocalGraph& g, const std::vector<int>& verts) {
  LocalGraph L;
  L.n = (int)verts.size();
  L.adj.assign(L.n, Bitset(L.n));
  for (int i = 0; i < L.n; ++i) {
    const Bitset& row = g.adj[verts[i]];
    Bitset& out = L.adj[i];
    for (int j = i + 1; j < L.n; ++j)
      if (row.test(verts[j])) {
        out.set(j);
        L.adj[j].set(i);
      }
  }
  return L;
}

// Connected components, listed in order of their smallest vertex.
std::vector<std::vector<int>> components(const LocalGraph& g) {
  std::vector<int> comp(g.n, -1);
  int nc = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = nc;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = g.adj[u].first(); v >= 0; v = g.adj[u].next(v))
        if (comp[v] < 0) {
          comp[v] = nc;
          stack.push_back(v);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int v = 0; v < g.n; ++v) out[comp[v]].push_back(v);
  return out;
}

// Components of the complement, without materializing it: BFS where the
// frontier absorbs every unvisited non-neighbor.
std::vector<std::vector<int>> co_components(const LocalGraph& g) {
  Bitset left(g.n);
  left.fill();
  std::vector<std::vector<int>> out;
  while (left.any()) {
    int s = left.first();
    left.reset(s);
    std::vector<int> comp{s};
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      Bitset grab = left;
      grab.andnot(g.adj[u]);
      for (int v = grab.first(); v >= 0; v = grab.next(v)) {
        left.reset(v);
        comp.push_back(v);
        stack.push_back(v);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

// Partition of V into {v} and the maximal modules avoiding v, by repeated
// splitting against every vertex's neighborhood until stable.
std::vector<Bitset> refine_avoiding(const LocalGraph& g, int v) {
  std::vector<Bitset> classes;
  Bitset pivot(g.n);
  pivot.set(v);
  classes.push_back(pivot);
  Bitset nv = g.adj[v];
  Bitset rest(g.n);
  rest.fill();
  rest.andnot(nv);
  rest.reset(v);
  if (nv.any()) classes.push_back(nv);
  if (rest.any()) classes.push_back(rest);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int z = 0; z < g.n; ++z) {
      std::size_t m = classes.size();
      for (std::size_t c = 0; c < m; ++c) {
        if (classes[c].test(z)) continue;
        Bitset inter = classes[c];
        inter &= g.adj[z];
        if (inter.none() || inter == classes[c]) continue;
        Bitset diff = classes[c];
        diff.andnot(inter);
        classes[c] = inter;
        classes.push_back(diff);
        changed = true;
      }
    }
  }
  return classes;
}

// Smallest module containing {u,w}: grow by every vertex the current set
// fails to see uniformly.
Bitset min_module_containing(const LocalGraph& g, int u, int w) {
  Bitset inside(g.n);
  inside.set(u);
  Bitset all_of = g.adj[u];      // candidates adjacent to everything so far
  Bitset none_of(g.n);           // candidates adjacent to nothing so far
  none_of.fill();
  none_of.andnot(g.adj[u]);
  none_of.reset(u);
  std::vector<int> todo{w};
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    if (inside.test(x)) continue;
    inside.set(x);
    all_of.reset(x);
    none_of.reset(x);
    Bitset split_a = all_of;
    split_a.andnot(g.adj[x]);
    Bitset split_b = none_of;
    split_b &= g.adj[x];
    all_of.andnot(split_a);
    none_of.andnot(split_b);
    for (int y = split_a.first(); y >= 0; y = split_a.next(y)) todo.push_back(y);
    for (int y = split_b.first(); y >= 0; y = split_b.next(y)) todo.push_back(y);
  }
  return inside;
}

// Maximal proper strong modules of a graph that is connected with connected
// complement. Classes of refine_avoiding(0) are the maximal modules avoiding
// vertex 0, except that the pieces inside the strong module of 0 must be
// regrouped; that module is recovered on the quotient of the classes.
std::vector<std::vector<int>> prime_partition(const LocalGraph& g) {
  const int v = 0;
  std::vector<Bitset> classes = refine_avoiding(g, v);
  std::sort(classes.begin(), classes.end(),
            [](const Bitset& a, const Bitset& b) { return a.first() < b.first(); });
  int r = (int)classes.size();

  LocalGraph q;
  q.n = r;
  q.adj.assign(r, Bitset(r));
  std::vector<int> rep(r);
  for (int i = 0; i < r; ++i) rep[i] = classes[i].first();
  int qv = -1;
  for (int i = 0; i < r; ++i) {
    if (classes[i].test(v)) qv = i;
    for (int j = i + 1; j < r; ++j)
      if (g.adj[rep[i]].test(rep[j])) {
        q.adj[i].set(j);
        q.adj[j].set(i);
      }
  }

  Bitset merged(r);
  merged.set(qv);
  for (int x = 0; x < r; ++x) {
    if (x == qv || merged.test(x)) continue;
    Bitset m = min_module_containing(q, qv, x);
    if (m.count() < r) merged |= m;
  }

  std::vector<std::vector<int>> parts;
  Bitset home(g.n);
  for (int i = 0; i < r; ++i) {
    if (merged.test(i))
      home |= classes[i];
    else
      parts.push_back(classes[i].to_list());
  }
  parts.push_back(home.to_list());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return parts;
}

// `local` holds the subgraph induced by verts; verts map local ids back to
// input ids, ascending.
int build_tree(LocalGraph local, const std::vector<int>& verts, ParseTree& t) {
  if (verts.size() == 1) {
    ParseTree::Node leaf;
    leaf.kind = NodeKind::Leaf;
    leaf.vertex = verts[0];
    return t.add(std::move(leaf));
  }
  const LocalGraph& L = local;

  auto recurse = [&](const std::vector<std::vector<int>>& parts) {
    std::vector<int> ids;
    for (const auto& p : parts) {
      std::vector<int> sub;
      sub.reserve(p.size());
      for (int x : p) sub.push_back(verts[x]);
      ids.push_back(build_tree(induce_local(L, p), sub, t));
    }
    return ids;
  };

  auto comps = components(L);
  if (comps.size() > 1) {
    ParseTree::Node node;
    node.kind = NodeKind::Union;
    node.children = recurse(comps);
    return t.add(std::move(node));
  }
  auto cocomps = co_components(L);
  if (cocomps.size() > 1) {
    ParseTree::Node node;
    node.kind = NodeKind::Join;
    node.children = recurse(cocomps);
    return t.add(std::move(node));
  }

  auto parts = prime_partition(L);
  ParseTree::Node node;
  node.kind = NodeKind::Prime;
  std::vector<std::pair<int, int>> qedges;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (L.adj[parts[i][0]].test(parts[j][0])) qedges.emplace_back((int)i, (int)j);
  node.quotient = from_edges((int)parts.size(), qedges);
  node.children = recurse(parts);
  return t.add(std::move(node));
}

}  // namespace

ParseTree modular_decomposition(const Graph& g) {
  if (g.n < 1)
    throw std::invalid_argument("modular_decomposition: graph must be nonempty");
  ParseTree t;
  std::vector<int> verts(g.n);
  std::iota(verts.begin(), verts.end(), 0);
  t.root = build_tree(local_from(g), verts, t);
  return t;
}

int modular_width(const ParseTree& t) {
  int w = 0;
  for (const auto& n : t.nodes)
    if (n.kind == NodeKind::Prime) w = std::max(w, (int)n.children.size());
  return w;
}

namespace {

Graph two_quotient(NodeKind kind) {
  // I2 for union, K2 for join
  return kind == NodeKind::Union ? make_empty(2)
                                 : from_edges(2, {{0, 1}});
}

int normalize_node(const ParseTree& t, int id, ParseTree& out) {
  const auto& node = t.at(id);
  switch (node.kind) {
    case NodeKind::Leaf: {
      ParseTree::Node leaf;
      leaf.kind = NodeKind::Leaf;
      leaf.vertex = node.vertex;
      return out.add(std::move(leaf));
    }
    case NodeKind::Prime: {
      ParseTree::Node prime;
      prime.kind = NodeKind::Prime;
      prime.quotient = node.quotient;
      for (int c : node.children) prime.children.push_back(normalize_node(t, c, out));
      return out.add(std::move(prime));
    }
    case NodeKind::Union:
    case NodeKind::Join: {
      int acc = normalize_node(t, node.children[0], out);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        ParseTree::Node pair;
        pair.kind = NodeKind::Prime;
        pair.quotient = two_quotient(node.kind);
        pair.children = {acc, normalize_node(t, node.children[i], out)};
        acc = out.add(std::move(pair));
      }
      return acc;
    }
  }
  throw std::logic_error("normalize: bad node kind");
}

}  // namespace

ParseTree normalize(const ParseTree& t) {
  ParseTree out;
  out.root = normalize_node(t, t.root, out);
  return out;
}

namespace {

std::vector<int> eval_node(const ParseTree& t, int id,
                           std::vector<std::vector<char>>& row) {
  const auto& node = t.at(id);
  if (node.kind == NodeKind::Leaf) return {node.vertex};
  std::vector<std::vector<int>> parts;
  std::vector<int> all;
  for (int c : node.children) {
    parts.push_back(eval_node(t, c, row));
    all.insert(all.end(), parts.back().begin(), parts.back().end());
  }
  auto join_blocks = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int u : a)
      for (int v : b) row[u][v] = row[v][u] = 1;
  };
  if (node.kind == NodeKind::Join) {
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        join_blocks(parts[i], parts[j]);
  } else if (node.kind == NodeKind::Prime) {
    if (node.quotient.n != (int)parts.size())
      throw std::logic_error("evaluate: quotient arity mismatch");
    for (auto [i, j] : node.quotient.edges()) join_blocks(parts[i], parts[j]);
  }
  return all;
}

}  // namespace

Graph evaluate(const ParseTree& t) {
  int n = t.leaf_count();
  std::vector<std::vector<char>> row(n, std::vector<char>(n, 0));
  std::vector<int> leaves = eval_node(t, t.root, row);
  std::vector<bool> seen(n, false);
  for (int v : leaves) {
    if (v < 0 || v >= n || seen[v])
      throw std::logic_error("evaluate: leaves are not a permutation of 0..n-1");
    seen[v] = true;
  }
  Graph g = make_empty(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (row[u][v]) g.adj[u].push_back(v);
  return g;
}

std::pair<int, NdPartition> neighborhood_diversity(const Graph& g) {
  if (g.n < 1)
    throw std::invalid_argument("neighborhood_diversity: graph must be nonempty");
  LocalGraph L = local_from(g);
  auto twins = [&](int u, int v) {
    Bitset x = L.adj[u];
    x ^= L.adj[v];
    x.reset(u);
    x.reset(v);
    return x.none();
  };
  NdPartition nd;
  std::vector<int> cls(g.n, -1);
  for (int u = 0; u < g.n; ++u) {
    if (cls[u] >= 0) continue;
    int id = (int)nd.classes.size();
    nd.classes.push_back({u});
    cls[u] = id;
    for (int v = u + 1; v < g.n; ++v)
      if (cls[v] < 0 && twins(u, v)) {
        cls[v] = id;
        nd.classes[id].push_back(v);
      }
  }
  int k = (int)nd.classes.size();
  nd.clique.assign(k, false);
  for (int i = 0; i < k; ++i)
    if (nd.classes[i].size() >= 2)
      nd.clique[i] = g.has_edge(nd.classes[i][0], nd.classes[i][1]);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(nd.classes[i][0], nd.classes[j][0])) edges.emplace_back(i, j);
  nd.class_graph = from_edges(k, edges);
  return {k, std::move(nd)};
}

namespace {

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Union: return "union";
    case NodeKind::Join: return "join";
    case NodeKind::Prime: return "prime";
  }
  return "?";
}

void json_node(const ParseTree& t, int id, std::string& out) {
  const auto& node = t.at(id);
  out += "{\"kind\":\"";
  out += kind_name(node.kind);
  out += "\"";
  if (node.kind == NodeKind::Leaf) {
    out += ",\"vertex\":" + std::to_string(node.vertex);
  } else {
    if (node.kind == NodeKind::Prime) {
      out += ",\"quotient\":{\"n\":" + std::to_string(node.quotient.n) +
             ",\"edges\":[";
      bool first = true;
      for (auto [u, v] : node.quotient.edges()) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(u) + "," + std::to_string(v) + "]";
      }
      out += "]}";
    }
    out += ",\"children\":[";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i) out += ",";
      json_node(t, node.children[i], out);
    }
    out += "]";
  }
  out += "}";
}

}  // namespace

std::string to_json(const ParseTree& t) {
  std::string out = "{\"schema\":\"mw.tree/1\",\"width\":" +
                    std::to_string(modular_width(t)) + ",\"root\":";
  json_node(t, t.root, out);
  out += "}";
  return out;
}

std::string to_dot(const ParseTree& t) {
  std::string out = "digraph parsetree {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    std::string label = kind_name(node.kind);
    if (node.kind == NodeKind::Leaf)
      label += " " + std::to_string(node.vertex);
    else if (node.kind == NodeKind::Prime)
      label += " /" + std::to_string(node.children.size());
    out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    for (int c : node.children)
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(c) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mw
