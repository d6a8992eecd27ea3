#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "mw/coloring.hpp"
#include "mw/errors.hpp"
#include "mw/gen.hpp"
#include "mw/oracles.hpp"
#include "test_util.hpp"

using namespace mw;

namespace {

long long best_partition_by_enumeration(const WeightedPartitionProblem& p) {
  long long best = LLONG_MIN;
  std::vector<std::uint32_t> blocks;
  std::function<void(const std::vector<std::uint32_t>&)> visit =
      [&](const std::vector<std::uint32_t>& bs) {
        long long v = 0;
        for (auto b : bs) v += p.cost[b];
        best = std::max(best, v);
      };
  testutil::enumerate_partitions(p.n, p.k, blocks, (1u << p.n) - 1, visit);
  return best;
}

WeightedPartitionProblem random_problem(SplitMix64& rng, int max_n, int max_m) {
  WeightedPartitionProblem p;
  p.n = 1 + (int)rng.below(max_n);
  p.k = 1 + (int)rng.below(p.n);
  p.cost.assign(std::size_t(1) << p.n, 0);
  for (auto& c : p.cost)
    c = (long long)rng.below(2 * max_m + 1) - max_m;
  return p;
}

}  // namespace

TEST_CASE("single element partition") {
  WeightedPartitionProblem p;
  p.n = 1;
  p.k = 3;
  p.cost = {0, 5};
  auto r = max_weighted_partition(p);
  CHECK(r.value == 5);
  REQUIRE(r.blocks.size() == 1);
  CHECK(r.blocks[0] == 1u);
}

TEST_CASE("negative costs favor singleton blocks") {
  WeightedPartitionProblem p;
  p.n = 2;
  p.k = 2;
  p.cost = {0, -1, -1, -3};
  auto r = max_weighted_partition(p);
  CHECK(r.value == -2);
  CHECK(r.blocks == std::vector<std::uint32_t>{1u, 2u});
}

TEST_CASE("partition DP equals Bell-number enumeration on 5 elements") {
  SplitMix64 rng(4096);
  for (int round = 0; round < 60; ++round) {
    WeightedPartitionProblem p = random_problem(rng, 5, 10);
    CHECK(max_weighted_partition(p).value == best_partition_by_enumeration(p));
  }
}

TEST_CASE("partition capacity and argument errors") {
  WeightedPartitionProblem p;
  p.n = 25;
  p.k = 2;
  p.cost.assign(8, 0);  // wrong size too, but capacity triggers first
  CHECK_THROWS_AS(max_weighted_partition(p), capacity_error);
  p.n = 2;
  CHECK_THROWS_AS(max_weighted_partition(p), std::invalid_argument);
}

TEST_CASE("fast partition value matches the DP") {
  SplitMix64 rng(777);
  for (int round = 0; round < 150; ++round) {
    WeightedPartitionProblem p = random_problem(rng, 8, 8);
    CHECK(max_weighted_partition_value_fast(p) ==
          max_weighted_partition(p).value);
  }
}

TEST_CASE("chromatic combine on tiny quotients") {
  CHECK(chromatic_of_substitution(gen_named("complete 2"), {1, 1}) == 2);
  CHECK(chromatic_of_substitution(make_empty(2), {3, 5}) == 5);
  CHECK(chromatic_of_substitution(gen_named("path 3"), {2, 1, 3}) == 4);
  CHECK_THROWS_AS(chromatic_of_substitution(make_empty(2), {1}),
                  std::invalid_argument);
}

TEST_CASE("chromatic number of named graphs") {
  CHECK(chromatic_number(gen_named("cycle 5")) == 3);
  CHECK(chromatic_number(gen_named("petersen")) == 3);
  CHECK(chromatic_number(gen_named("grotzsch")) == 4);
  CHECK(chromatic_number(make_empty(1)) == 1);
  CHECK(chromatic_number(make_empty(7)) == 1);
  CHECK(chromatic_number(gen_named("complete 6")) == 6);
}

TEST_CASE("blown-up five-cycle needs five colors") {
  std::vector<Graph> parts(5, gen_named("complete 2"));
  Graph h = substitute(gen_named("cycle 5"), parts);
  CHECK(oracles::brute_chromatic(h) == 5);
  CHECK(chromatic_number(h) == 5);
}

TEST_CASE("chromatic number equals the oracle on a random corpus") {
  auto corpus = testutil::random_corpus(300, 9, 20110);
  for (const auto& g : corpus)
    CHECK(chromatic_number(g) == oracles::brute_chromatic(g));
}

TEST_CASE("sandwich bound at every prime node") {
  SplitMix64 rng(99);
  for (int round = 0; round < 80; ++round) {
    int qn = 2 + (int)rng.below(5);
    Graph q = gen_random(qn, 50, rng.next());
    std::vector<int> chi;
    int top = 0;
    long long sum = 0;
    for (int i = 0; i < qn; ++i) {
      chi.push_back(1 + (int)rng.below(4));
      top = std::max(top, chi.back());
      sum += chi.back();
    }
    int combined = chromatic_of_substitution(q, chi);
    CHECK(combined >= top);
    CHECK(combined <= sum);
  }
}

TEST_CASE("replacing parts by cliques of their chromatic number is invariant") {
  SplitMix64 rng(314);
  for (int round = 0; round < 60; ++round) {
    int qn = 2 + (int)rng.below(5);
    Graph q = gen_random(qn, 50, rng.next());
    std::vector<Graph> parts, cliques;
    for (int i = 0; i < qn; ++i) {
      parts.push_back(gen_random(1 + (int)rng.below(3), 50, rng.next()));
      cliques.push_back(
          gen_named("complete " + std::to_string(oracles::brute_chromatic(parts.back()))));
    }
    Graph h = substitute(q, parts);
    Graph hk = substitute(q, cliques);
    CHECK(oracles::brute_chromatic(h) == oracles::brute_chromatic(hk));
  }
}

TEST_CASE("witness is proper and uses exactly chi colors") {
  CHECK(coloring_witness(gen_named("complete 3")).colors_used == 3);
  CHECK(coloring_witness(make_empty(5)).colors_used == 1);
  auto corpus = testutil::random_corpus(250, 9, 5005);
  for (const auto& g : corpus) {
    auto w = coloring_witness(g);
    CHECK(w.colors_used == oracles::brute_chromatic(g));
    CHECK(oracles::validate_coloring(g, w.color, w.colors_used));
  }
}

TEST_CASE("fast path plugs into the tree evaluation") {
  ColorOptions fast;
  fast.fast_mwp = true;
  auto corpus = testutil::random_corpus(60, 8, 321321);
  for (const auto& g : corpus)
    CHECK(chromatic_number(g, fast) == chromatic_number(g));
}
