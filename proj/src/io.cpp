#include "mw/io.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "mw/errors.hpp"

namespace mw {

namespace {

// ---------- graph6 ----------

constexpr const char* kGraph6Header = ">>graph6<<";

std::string emit_graph6(const Graph& g) {
  std::string out;
  int n = g.n;
  if (n <= 62) {
    out.push_back((char)(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back((char)(63 + ((n >> 12) & 63)));
    out.push_back((char)(63 + ((n >> 6) & 63)));
    out.push_back((char)(63 + (n & 63)));
  } else {
    throw capacity_error("graph6 emitter supports at most 258047 vertices");
  }
  int bit = 5;
  int cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) cur |= 1 << bit;
      if (--bit < 0) {
        out.push_back((char)(cur + 63));
        cur = 0;
        bit = 5;
      }
    }
  if (bit != 5) out.push_back((char)(cur + 63));
  return out;
}

Graph parse_graph6(const std::string& bytes) {
  std::size_t pos = 0;
  if (bytes.rfind(kGraph6Header, 0) == 0) pos += std::string(kGraph6Header).size();
  auto need = [&](std::size_t k) {
    if (pos + k > bytes.size())
      throw parse_error("graph6: truncated input", bytes.size());
  };
  auto byte6 = [&]() {
    need(1);
    unsigned char c = bytes[pos];
    if (c < 63 || c > 126)
      throw parse_error("graph6: byte out of range", pos);
    ++pos;
    return (int)(c - 63);
  };
  need(1);
  long long n;
  if ((unsigned char)bytes[pos] == 126) {
    ++pos;
    need(1);
    if ((unsigned char)bytes[pos] == 126)
      throw parse_error("graph6: 8-byte vertex counts not supported", pos);
    long long a = byte6(), b = byte6(), c = byte6();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = byte6();
  }
  Graph g = make_empty((int)n);
  int bit = -1, cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bit < 0) {
        cur = byte6();
        bit = 5;
      }
      if ((cur >> bit) & 1) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
      --bit;
    }
  while (pos < bytes.size()) {
    if (!std::isspace((unsigned char)bytes[pos]))
      throw parse_error("graph6: trailing bytes after graph", pos);
    ++pos;
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

// ---------- whitespace tokenizer with byte offsets ----------

struct Tokens {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  long long next_int(const char* what) {
    skip_ws();
    std::size_t start = pos;
    if (pos >= s.size())
      throw parse_error(std::string("expected ") + what + ", got end of input", pos);
    bool neg = false;
    if (s[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
      throw parse_error(std::string("expected ") + what, start);
    long long v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1ll << 40)) throw parse_error("number too large", start);
      ++pos;
    }
    return neg ? -v : v;
  }
};

// ---------- edge list: vertex count, then endpoint pairs ----------

Graph parse_edge_list(const std::string& bytes) {
  Tokens t{bytes};
  std::size_t at = t.pos;
  long long n = t.next_int("vertex count");
  if (n < 0) throw parse_error("vertex count must be nonnegative", at);
  std::vector<std::pair<int, int>> edges;
  while (!t.eof()) {
    std::size_t eat = t.pos;
    long long u = t.next_int("edge endpoint");
    long long v = t.next_int("edge endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw parse_error("edge endpoint out of range", eat);
    if (u == v) throw parse_error("self-loop not allowed", eat);
    edges.emplace_back((int)u, (int)v);
  }
  return from_edges((int)n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// ---------- DIMACS .col ----------

Graph parse_dimacs(const std::string& bytes) {
  long long n = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t eol = bytes.find('\n', pos);
    if (eol == std::string::npos) eol = bytes.size();
    std::size_t line_start = pos;
    std::string line = bytes.substr(pos, eol - pos);
    pos = eol + 1;
    std::size_t i = 0;
    while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
    if (i >= line.size()) continue;
    char tag = line[i];
    if (tag == 'c') continue;
    Tokens t{line};
    t.pos = i + 1;
    if (tag == 'p') {
      t.skip_ws();
      if (line.compare(t.pos, 4, "edge") != 0)
        throw parse_error("dimacs: expected 'p edge'", line_start + t.pos);
      t.pos += 4;
      n = t.next_int("vertex count");
      t.next_int("edge count");  // informative only
      if (n < 0) throw parse_error("dimacs: negative vertex count", line_start);
    } else if (tag == 'e') {
      if (n < 0)
        throw parse_error("dimacs: edge before 'p edge' header", line_start + i);
      std::size_t eat = line_start + t.pos;
      long long u = t.next_int("edge endpoint");
      long long v = t.next_int("edge endpoint");
      if (u < 1 || u > n || v < 1 || v > n)
        throw parse_error("dimacs: endpoint out of 1..n", eat);
      if (u == v) throw parse_error("dimacs: self-loop not allowed", eat);
      edges.emplace_back((int)u - 1, (int)v - 1);
    } else {
      throw parse_error("dimacs: unknown line type", line_start + i);
    }
  }
  if (n < 0) throw parse_error("dimacs: missing 'p edge' header", bytes.size());
  return from_edges((int)n, edges);
}

std::string emit_dimacs(const Graph& g) {
  auto es = g.edges();
  std::string out =
      "p edge " + std::to_string(g.n) + " " + std::to_string(es.size()) + "\n";
  for (auto [u, v] : es)
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

}  // namespace

Graph parse_graph(Format f, const std::string& bytes) {
  switch (f) {
    case Format::Graph6: return parse_graph6(bytes);
    case Format::EdgeList: return parse_edge_list(bytes);
    case Format::Dimacs: return parse_dimacs(bytes);
  }
  throw std::invalid_argument("unknown format");
}

std::string emit_graph(const Graph& g, Format f) {
  switch (f) {
    case Format::Graph6: return emit_graph6(g);
    case Format::EdgeList: return emit_edge_list(g);
    case Format::Dimacs: return emit_dimacs(g);
  }
  throw std::invalid_argument("unknown format");
}

Format detect_format(const std::string& bytes) {
  std::size_t i = 0;
  while (i < bytes.size() && std::isspace((unsigned char)bytes[i])) ++i;
  if (i >= bytes.size()) throw parse_error("empty input", 0);
  unsigned char c = bytes[i];
  if (c == 'p' || c == 'c') return Format::Dimacs;
  if (std::isdigit(c)) return Format::EdgeList;
  if (c == '>' || (c >= 63 && c <= 126)) return Format::Graph6;
  throw parse_error("cannot detect input format", i);
}

const char* format_name(Format f) {
  switch (f) {
    case Format::Graph6: return "graph6";
    case Format::EdgeList: return "edgelist";
    case Format::Dimacs: return "dimacs";
  }
  return "?";
}

}  // namespace mw
