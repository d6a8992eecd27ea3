#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mw/errors.hpp"
#include "mw/gen.hpp"
#include "mw/oracles.hpp"
#include "test_util.hpp"

using namespace mw;
using namespace mw::oracles;

TEST_CASE("held_karp on named graphs") {
  CHECK(held_karp_hamiltonian(gen_named("cycle 5")));
  CHECK(!held_karp_hamiltonian(gen_named("path 5")));
  CHECK(held_karp_hamiltonian(gen_named("complete-bipartite 3 3")));
  CHECK(!held_karp_hamiltonian(gen_named("complete-bipartite 2 3")));
  CHECK(!held_karp_hamiltonian(gen_named("petersen")));
  CHECK(held_karp_hamiltonian(gen_named("grotzsch")));
}

TEST_CASE("held_karp degenerate closed walks") {
  CHECK(!held_karp_hamiltonian(make_empty(1)));
  CHECK(held_karp_hamiltonian(make_empty(1), true));
  CHECK(!held_karp_hamiltonian(gen_named("complete 2")));
  CHECK(held_karp_hamiltonian(gen_named("complete 2"), true));
  CHECK(!held_karp_hamiltonian(make_empty(2), true));
  CHECK_THROWS_AS(held_karp_hamiltonian(make_empty(26)), capacity_error);
}

TEST_CASE("brute path partition on named graphs") {
  CHECK(brute_path_partition(make_empty(4)) == 4);
  CHECK(brute_path_partition(gen_named("complete-bipartite 1 3")) == 2);
  CHECK(brute_path_partition(gen_named("cycle 6")) == 1);
  CHECK(brute_path_partition(gen_named("path 5")) == 1);
  CHECK_THROWS_AS(brute_path_partition(make_empty(15), 12), capacity_error);
}

TEST_CASE("brute chromatic on named graphs") {
  CHECK(brute_chromatic(gen_named("complete 4")) == 4);
  CHECK(brute_chromatic(gen_named("cycle 5")) == 3);
  CHECK(brute_chromatic(gen_named("cycle 6")) == 2);
  CHECK(brute_chromatic(gen_named("petersen")) == 3);
  CHECK(brute_chromatic(gen_named("grotzsch")) == 4);
}

TEST_CASE("brute modular width on named graphs") {
  CHECK(brute_modular_width(gen_named("path 4")) == 4);
  CHECK(brute_modular_width(gen_named("complete 5")) == 0);
  CHECK(brute_modular_width(gen_named("cycle 5")) == 5);
  CHECK(brute_modular_width(make_empty(6)) == 0);
}

TEST_CASE("adding the path-partition count of universal vertices closes a cycle") {
  auto corpus = testutil::random_corpus(120, 7, 99);
  for (const auto& g : corpus) {
    int ham = brute_path_partition(g);
    CHECK(held_karp_hamiltonian(add_universal(g, ham), true));
    if (ham > 1)
      CHECK(!held_karp_hamiltonian(add_universal(g, ham - 1), true));
  }
}

TEST_CASE("validators accept good witnesses and reject bad ones") {
  Graph c4 = gen_named("cycle 4");
  CHECK(validate_cycle(c4, {0, 1, 2, 3}));
  CHECK(!validate_cycle(c4, {0, 2, 1, 3}));
  CHECK(!validate_cycle(c4, {0, 1, 2}));
  CHECK(validate_path_partition(c4, {{0, 1}, {3, 2}}));
  CHECK(!validate_path_partition(c4, {{0, 1}, {3}}));
  CHECK(!validate_path_partition(c4, {{0, 2}, {1}, {3}}));
  CHECK(validate_coloring(c4, {0, 1, 0, 1}, 2));
  CHECK(!validate_coloring(c4, {0, 1, 0, 1}, 3));  // color 2 unused
  CHECK(!validate_coloring(c4, {0, 0, 1, 1}, 2));
}
