#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mw/gen.hpp"
#include "mw/ham.hpp"
#include "mw/oracles.hpp"
#include "test_util.hpp"

using namespace mw;

namespace {

FlowMultigraph flow_of(int n, std::vector<std::tuple<int, int, long long>> arcs) {
  FlowMultigraph m;
  m.n = n;
  m.mult.assign(n, std::vector<long long>(n, 0));
  for (auto [a, b, k] : arcs) m.mult[a][b] = k;
  return m;
}

bool tour_is_valid(const FlowMultigraph& m, const std::vector<Arc>& tour) {
  auto left = m.mult;
  for (std::size_t i = 0; i < tour.size(); ++i) {
    if (--left[tour[i].first][tour[i].second] < 0) return false;
    if (i > 0 && tour[i - 1].second != tour[i].first) return false;
  }
  if (!tour.empty() && tour.back().second != tour.front().first) return false;
  for (const auto& row : left)
    for (long long v : row)
      if (v != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("flow ilp structure") {
  Graph k2 = gen_named("complete 2");
  IlpInstance inst = build_ham_ilp(k2, {{2, 2}, {2, 2}});
  CHECK(inst.p == 2);
  CHECK(inst.upper == std::vector<long long>{2, 2});
  CHECK(inst.cons.size() == 6);  // balance, cap, need per vertex
  CHECK(static_cast<bool>(inst.lazy_cuts));
  IlpInstance eager = build_ham_ilp(k2, {{2, 2}, {2, 2}}, true);
  CHECK(!eager.lazy_cuts);
  CHECK(eager.cons.size() == 7);  // one bipartition

  IlpInstance mixed = build_ham_ilp(k2, {{1, 3}, {2, 5}});
  CHECK(mixed.upper == std::vector<long long>{3, 3});
}

TEST_CASE("record validation") {
  Graph k2 = gen_named("complete 2");
  CHECK_THROWS_AS(build_ham_ilp(k2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_ham_ilp(k2, {{1, 1}, {3, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_ham_ilp(k2, {{0, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("stitch rejects a provider with the wrong path count") {
  Graph k2 = gen_named("complete 2");
  auto flow = flow_of(2, {{0, 1, 2}, {1, 0, 2}});
  PathProvider bad = [](int, long long) {
    return std::vector<std::vector<int>>{{0}};
  };
  CHECK_THROWS_AS(stitch_witness(k2, bad, flow), std::logic_error);
}

TEST_CASE("two blocks of two vertices each close a four-cycle") {
  auto flow = has_ham_cycle_product(gen_named("complete 2"), {{2, 2}, {2, 2}});
  REQUIRE(flow.has_value());
  CHECK(flow->mult[0][1] == 2);
  CHECK(flow->mult[1][0] == 2);
  CHECK(oracles::held_karp_hamiltonian(
      substitute(gen_named("complete 2"), {make_empty(2), make_empty(2)})));
}

TEST_CASE("unbalanced complete bipartite blocks are infeasible") {
  CHECK(!has_ham_cycle_product(gen_named("complete 2"), {{3, 3}, {2, 2}}));
  CHECK(!oracles::held_karp_hamiltonian(gen_named("complete-bipartite 2 3")));
}

TEST_CASE("disconnected quotient is infeasible") {
  CHECK(!has_ham_cycle_product(make_empty(2), {{1, 1}, {1, 1}}));
  CHECK(!has_ham_cycle_product(make_empty(2), {{2, 5}, {1, 4}}));
}

TEST_CASE("cycle quotient with unit blocks is itself the cycle") {
  std::vector<NodeRecord> ones(5, {1, 1});
  CHECK(has_ham_cycle_product(gen_named("cycle 5"), ones).has_value());
}

TEST_CASE("star product has no cycle") {
  // path quotient, two-vertex independent middle... star K_{1,3} evaluated
  CHECK(!has_ham_cycle_product(gen_named("path 3"), {{2, 2}, {1, 1}, {1, 1}}));
  CHECK(!oracles::held_karp_hamiltonian(
      substitute(gen_named("path 3"),
                 {make_empty(2), make_empty(1), make_empty(1)})));
}

TEST_CASE("degenerate two-vertex product accepts an edge-reusing walk") {
  auto flow = has_ham_cycle_product(gen_named("complete 2"), {{1, 1}, {1, 1}});
  REQUIRE(flow.has_value());
  CHECK(flow->mult[0][1] == 1);
  CHECK(flow->mult[1][0] == 1);
  // the public predicate still rejects two-vertex graphs
  CHECK(!hamiltonian_cycle(gen_named("complete 2")));
}

TEST_CASE("eager cuts match lazy separation") {
  HamOptions lazy, eager;
  eager.eager_cuts = true;
  SplitMix64 rng(505);
  for (int round = 0; round < 40; ++round) {
    int qn = 2 + (int)rng.below(4);
    Graph q = gen_random(qn, 60, rng.next());
    std::vector<NodeRecord> recs;
    for (int i = 0; i < qn; ++i) {
      long long size = 1 + (long long)rng.below(3);
      long long ham = 1 + (long long)rng.below(size);
      recs.push_back({ham, size});
    }
    CHECK(has_ham_cycle_product(q, recs, lazy).has_value() ==
          has_ham_cycle_product(q, recs, eager).has_value());
  }
}

TEST_CASE("record of a star product") {
  // one hub vertex joined to three independent vertices
  NodeRecord r =
      ham_of_product(gen_named("complete 2"), {{1, 1}, {3, 3}});
  CHECK(r.ham == 2);
  CHECK(r.size == 4);
  CHECK(oracles::brute_path_partition(gen_named("complete-bipartite 1 3")) == 2);
}

TEST_CASE("binary search and linear scan agree") {
  HamOptions scan;
  scan.linear_scan = true;
  SplitMix64 rng(42);
  for (int round = 0; round < 30; ++round) {
    int qn = 2 + (int)rng.below(4);
    Graph q = gen_random(qn, 60, rng.next());
    std::vector<NodeRecord> recs;
    for (int i = 0; i < qn; ++i) {
      long long size = 1 + (long long)rng.below(3);
      long long ham = 1 + (long long)rng.below(size);
      recs.push_back({ham, size});
    }
    NodeRecord a = ham_of_product(q, recs);
    NodeRecord b = ham_of_product(q, recs, scan);
    CHECK(a.ham == b.ham);
    CHECK(a.size == b.size);
  }
}

TEST_CASE("monotone feasibility in the extension size") {
  SplitMix64 rng(1717);
  for (int round = 0; round < 25; ++round) {
    int qn = 2 + (int)rng.below(3);
    Graph q = add_universal(gen_random(qn, 50, rng.next()), 1);
    std::vector<NodeRecord> recs;
    for (int i = 0; i < qn; ++i) {
      long long size = 1 + (long long)rng.below(3);
      long long ham = 1 + (long long)rng.below(size);
      recs.push_back({ham, size});
    }
    long long total = 0;
    for (const auto& r : recs) total += r.size;
    bool prev = false;
    for (long long l = 1; l <= total; ++l) {
      auto recs2 = recs;
      recs2.push_back({l, l});
      bool now = has_ham_cycle_product(q, recs2).has_value();
      if (prev) CHECK(now);
      prev = now;
    }
  }
}

TEST_CASE("ham numbers of named graphs") {
  CHECK(ham_number(gen_named("cycle 6")) == 1);
  CHECK(hamiltonian_path(gen_named("cycle 6")));
  CHECK(hamiltonian_cycle(gen_named("cycle 6")));

  CHECK(ham_number(gen_named("complete-bipartite 1 4")) == 3);
  CHECK(!hamiltonian_path(gen_named("complete-bipartite 1 4")));
  CHECK(!hamiltonian_cycle(gen_named("complete-bipartite 1 4")));

  CHECK(ham_number(make_empty(5)) == 5);
  CHECK(ham_number(gen_named("path 5")) == 1);
  CHECK(ham_number(make_empty(1)) == 1);
  CHECK(hamiltonian_path(make_empty(1)));
  CHECK(!hamiltonian_cycle(make_empty(1)));
  CHECK(!hamiltonian_cycle(gen_named("complete 2")));

  CHECK(ham_number(gen_named("petersen")) == 1);
  CHECK(hamiltonian_path(gen_named("petersen")));
  CHECK(!hamiltonian_cycle(gen_named("petersen")));
  CHECK(hamiltonian_cycle(gen_named("grotzsch")));
}

TEST_CASE("eulerian tours") {
  auto two = flow_of(2, {{0, 1, 1}, {1, 0, 1}});
  auto t2 = eulerian_tour(two, 0);
  CHECK(t2 == std::vector<Arc>{{0, 1}, {1, 0}});
  CHECK(eulerian_tour(flow_of(1, {}), 0).empty());

  auto bad = flow_of(2, {{0, 1, 2}, {1, 0, 1}});
  CHECK_THROWS_AS(eulerian_tour(bad, 0), std::logic_error);
  auto split = flow_of(4, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}});
  CHECK_THROWS_AS(eulerian_tour(split, 0), std::logic_error);

  SplitMix64 rng(808);
  for (int round = 0; round < 200; ++round) {
    // random balanced connected multigraph: overlay directed cycles
    int n = 2 + (int)rng.below(5);
    FlowMultigraph m;
    m.n = n;
    m.mult.assign(n, std::vector<long long>(n, 0));
    int cycles = 1 + (int)rng.below(3);
    for (int c = 0; c < cycles; ++c) {
      int len = 2 + (int)rng.below((std::uint64_t)n);
      std::vector<int> verts;
      for (int i = 0; i < len; ++i) verts.push_back((int)rng.below(n));
      for (int i = 0; i < len; ++i) {
        int a = verts[i], b = verts[(i + 1) % len];
        if (a != b) m.mult[a][b] += 1;
      }
    }
    if (!m.support_connected()) continue;
    bool all = true;
    for (int v = 0; v < n; ++v) all = all && m.out_degree(v) > 0;
    if (!all) continue;
    int start = 0;
    while (m.out_degree(start) == 0) ++start;
    CHECK(tour_is_valid(m, eulerian_tour(m, start)));
  }
}

TEST_CASE("stitching a triangle from a hub and an edge") {
  Graph k2 = gen_named("complete 2");
  auto flow = flow_of(2, {{0, 1, 1}, {1, 0, 1}});
  PathProvider provider = [](int child, long long p) {
    REQUIRE(p == 1);
    if (child == 0) return std::vector<std::vector<int>>{{0}};
    return std::vector<std::vector<int>>{{1, 2}};
  };
  auto cycle = stitch_witness(k2, provider, flow);
  Graph triangle = substitute(k2, {make_empty(1), gen_named("complete 2")});
  CHECK(oracles::validate_cycle(triangle, cycle));
}

TEST_CASE("stitching a four-cycle from two independent pairs") {
  Graph k2 = gen_named("complete 2");
  auto flow = flow_of(2, {{0, 1, 2}, {1, 0, 2}});
  PathProvider provider = [](int child, long long p) {
    REQUIRE(p == 2);
    if (child == 0) return std::vector<std::vector<int>>{{0}, {1}};
    return std::vector<std::vector<int>>{{2}, {3}};
  };
  auto cycle = stitch_witness(k2, provider, flow);
  Graph c4 = substitute(k2, {make_empty(2), make_empty(2)});
  CHECK(oracles::validate_cycle(c4, cycle));
}

TEST_CASE("path partition witnesses on named graphs") {
  auto singles = path_partition_witness(make_empty(3));
  CHECK(singles.size() == 3);
  auto whole = path_partition_witness(gen_named("path 4"));
  CHECK(whole.size() == 1);
  CHECK(oracles::validate_path_partition(gen_named("path 4"), whole));
}

TEST_CASE("witnesses across a random corpus") {
  auto corpus = testutil::random_corpus(300, 9, 271828);
  for (const auto& g : corpus) {
    int ham = oracles::brute_path_partition(g);
    CHECK(ham_number(g) == ham);
    auto paths = path_partition_witness(g);
    CHECK((int)paths.size() == ham);
    CHECK(oracles::validate_path_partition(g, paths));
    bool cyc = hamiltonian_cycle(g);
    CHECK(cyc == (g.n >= 3 && oracles::held_karp_hamiltonian(g)));
    auto witness = hamiltonian_cycle_witness(g);
    CHECK(witness.has_value() == cyc);
    if (witness) CHECK(oracles::validate_cycle(g, *witness));
  }
}
