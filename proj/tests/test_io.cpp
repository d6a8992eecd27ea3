#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mw/errors.hpp"
#include "mw/gen.hpp"
#include "mw/io.hpp"

using namespace mw;

namespace {

// Minimal reference decoder, written against the published bit layout and
// kept independent of the library parser.
long long count_graph6_edges(const std::string& s) {
  std::size_t pos = 0;
  long long n = s[pos++] - 63;
  long long edges = 0, pairs = n * (n - 1) / 2;
  for (long long b = 0; b < pairs; ++b) {
    int byte = s[pos + b / 6] - 63;
    if ((byte >> (5 - b % 6)) & 1) ++edges;
  }
  return edges;
}

}  // namespace

TEST_CASE("graph6 decodes the documented example and round-trips its bytes") {
  Graph g = parse_graph(Format::Graph6, "D?{");
  CHECK(g.n == 5);
  CHECK(g.edge_count() == count_graph6_edges("D?{"));
  CHECK(emit_graph(g, Format::Graph6) == "D?{");
}

TEST_CASE("edge list basics") {
  Graph g = parse_graph(Format::EdgeList, "3\n0 1\n1 2\n");
  CHECK(g == gen_named("path 3"));
  CHECK(parse_graph(Format::EdgeList, emit_graph(g, Format::EdgeList)) == g);
}

TEST_CASE("dimacs basics") {
  Graph g = parse_graph(Format::Dimacs, "p edge 2 1\ne 1 2\n");
  CHECK(g == gen_named("complete 2"));
  Graph c5 = gen_named("cycle 5");
  CHECK(parse_graph(Format::Dimacs, emit_graph(c5, Format::Dimacs)) == c5);
  Graph with_comment =
      parse_graph(Format::Dimacs, "c hello\np edge 3 1\ne 3 1\n");
  CHECK(with_comment.has_edge(0, 2));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_graph(Format::Graph6, "D?"), parse_error);
  CHECK_THROWS_AS(parse_graph(Format::Graph6, "D?{            x"), parse_error);
  CHECK_THROWS_AS(parse_graph(Format::EdgeList, "3\n0 one\n"), parse_error);
  CHECK_THROWS_AS(parse_graph(Format::EdgeList, "3\n0 7\n"), parse_error);
  CHECK_THROWS_AS(parse_graph(Format::Dimacs, "e 1 2\n"), parse_error);
  try {
    parse_graph(Format::EdgeList, "3\n0 x\n");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("format round-trip identity on a random corpus") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    int n = 1 + (int)rng.below(30);
    Graph g = gen_random(n, 20 + 20 * (i % 4), rng.next());
    for (Format f : {Format::Graph6, Format::EdgeList, Format::Dimacs})
      CHECK(parse_graph(f, emit_graph(g, f)) == g);
  }
}

TEST_CASE("graph6 long form handles more than 62 vertices") {
  Graph g = gen_random(100, 10, 5);
  std::string bytes = emit_graph(g, Format::Graph6);
  CHECK((unsigned char)bytes[0] == 126);
  CHECK(parse_graph(Format::Graph6, bytes) == g);
}

TEST_CASE("format detection heuristic") {
  CHECK(detect_format("D?{") == Format::Graph6);
  CHECK(detect_format(">>graph6<<D?{") == Format::Graph6);
  CHECK(detect_format("3\n0 1\n") == Format::EdgeList);
  CHECK(detect_format("p edge 2 1\ne 1 2\n") == Format::Dimacs);
  CHECK(detect_format("c x\np edge 1 0\n") == Format::Dimacs);
}
