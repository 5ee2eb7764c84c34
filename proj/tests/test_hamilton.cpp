#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "yutsis/enumerate.hpp"
#include "yutsis/hamilton.hpp"
#include "yutsis/lcf.hpp"

using namespace yutsis;

TEST_CASE("the two classic non-Hamiltonian graphs") {
  CHECK(hamiltonian_cycles(fixtures::petersen()).empty());
  CHECK_FALSE(is_hamiltonian(fixtures::petersen()));
  CHECK(hamiltonian_cycles(fixtures::tietze()).empty());
}

TEST_CASE("K4 has exactly the three cycles the permutation oracle finds") {
  auto cycles = hamiltonian_cycles(fixtures::k4());
  auto expected = oracles::permutation_hamiltonian_cycles(fixtures::k4());
  REQUIRE(expected.size() == 3);
  CHECK(cycles == expected);
}

TEST_CASE("search matches the permutation oracle on whole strata") {
  for (int n : {4, 6, 8}) {
    for (const CubicGraph& g : enumerate_cubic(n))
      CHECK(hamiltonian_cycles(g) == oracles::permutation_hamiltonian_cycles(g));
  }
}

TEST_CASE("every reported cycle is a cycle and the list has no rotation/reflection twins") {
  for (const CubicGraph& g : enumerate_cubic(10)) {
    auto cycles = hamiltonian_cycles(g);
    std::set<std::set<Edge>> edge_sets;
    for (const HamiltonianCycle& c : cycles) {
      check_cycle(g, c);
      CHECK(c[0] == 0);
      CHECK(c[1] < c[g.n() - 1]);
      std::set<Edge> es;
      for (int i = 0; i < g.n(); ++i) es.insert(Edge(c[i], c[(i + 1) % g.n()]));
      edge_sets.insert(std::move(es));
    }
    // Distinct chains use distinct edge sets, so rotations/reflections of
    // one geometric cycle cannot appear twice.
    CHECK(edge_sets.size() == cycles.size());
  }
}

TEST_CASE("the 8-vertex chain examples")
{
  // Both chains below appear among the cycles of the graph [2,3,-2,3;-].
  auto [g, ring] = decode("[2,3,-2,3;-]");
  auto cycles = hamiltonian_cycles(g);
  HamiltonianCycle first{0, 1, 2, 3, 4, 5, 6, 7};
  HamiltonianCycle second{0, 2, 3, 6, 7, 5, 4, 1};
  // Normalize the second chain: starts at 0, direction with c[1] < c[7].
  if (second[1] > second[7]) std::reverse(second.begin() + 1, second.end());
  CHECK(std::find(cycles.begin(), cycles.end(), first) != cycles.end());
  CHECK(std::find(cycles.begin(), cycles.end(), second) != cycles.end());
}

TEST_CASE("Hamiltonian counts per stratum") {
  for (int n : {4, 6, 8}) {
    for (const CubicGraph& g : enumerate_cubic(n)) CHECK(is_hamiltonian(g));
  }
  int non_ham = 0;
  for (const CubicGraph& g : enumerate_cubic(10))
    if (!is_hamiltonian(g)) ++non_ham;
  CHECK(non_ham == 2);
}

TEST_CASE("chain validation rejects broken input") {
  CHECK_THROWS_AS(check_cycle(fixtures::k4(), {0, 1, 2}), Error);
  CHECK_THROWS_AS(check_cycle(fixtures::k4(), {0, 1, 1, 2}), Error);
  CHECK_THROWS_AS(check_cycle(fixtures::utility(), {0, 1, 2, 3, 4, 5}), Error);
}
