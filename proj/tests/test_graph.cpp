#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "yutsis/canonical.hpp"
#include "yutsis/graph.hpp"

using namespace yutsis;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::NotFound;
}

}  // namespace

TEST_CASE("K4 builds and is fully valid") {
  CubicGraph g = fixtures::k4();
  CHECK(g.n() == 4);
  CHECK(g.edges().size() == 6);
  CHECK(g.connected());
}

TEST_CASE("validation rejects the named defect cases") {
  CHECK(code_of([] { CubicGraph(5, {}); }) == ErrorCode::OddVertexCount);
  CHECK(code_of([] {
          CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {2, 2}, {1, 3}, {2, 3}});
        }) == ErrorCode::Loop);
  CHECK(code_of([] {
          CubicGraph(4, {{0, 1}, {1, 0}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] {
          CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
        }) == ErrorCode::WrongDegree);
  CHECK(code_of([] { CubicGraph(2, {}); }) == ErrorCode::TooSmall);
}

TEST_CASE("utility graph builds and a doubled K4 is flagged disconnected") {
  CubicGraph util = fixtures::utility();
  CHECK(util.connected());

  CubicGraph two_k4(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                        {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  CHECK_FALSE(two_k4.connected());
  CHECK_THROWS_AS(all_pairs_distances(two_k4), Error);
}

TEST_CASE("edge counts obey the handshake identity") {
  for (const CubicGraph& g : {fixtures::k4(), fixtures::utility(), fixtures::petersen()}) {
    CHECK(static_cast<int>(g.edges().size()) == 3 * g.n() / 2);
    int degree_sum = 0;
    for (int v = 0; v < g.n(); ++v)
      degree_sum += static_cast<int>(g.neighbors(v).size());
    CHECK(degree_sum == 3 * g.n());
  }
}

TEST_CASE("distances: K4 all ones, Petersen diameter 2, matches Floyd-Warshall") {
  DistanceMatrix k4 = all_pairs_distances(fixtures::k4());
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) CHECK(k4.at(u, v) == (u == v ? 0 : 1));

  CubicGraph pet = fixtures::petersen();
  DistanceMatrix d = all_pairs_distances(pet);
  CHECK(d.max() == 2);
  auto ref = oracles::floyd_warshall(pet);
  for (int u = 0; u < pet.n(); ++u)
    for (int v = 0; v < pet.n(); ++v) CHECK(d.at(u, v) == ref[u][v]);
}

TEST_CASE("distances satisfy the triangle inequality entry-wise") {
  CubicGraph g = fixtures::tietze();
  DistanceMatrix d = all_pairs_distances(g);
  for (int a = 0; a < g.n(); ++a)
    for (int b = 0; b < g.n(); ++b)
      for (int c = 0; c < g.n(); ++c) CHECK(d.at(a, b) <= d.at(a, c) + d.at(c, b));
}

TEST_CASE("canonical form is invariant under relabeling") {
  CubicGraph g = fixtures::k4();
  std::vector<int> perm{0, 2, 1, 3};
  CHECK(canonical_form(relabel(g, perm)) == canonical_form(g));

  std::mt19937 rng(20240901);
  for (const CubicGraph& base : {fixtures::petersen(), fixtures::tietze()}) {
    CanonicalForm expected = canonical_form(base);
    std::vector<int> p(base.n());
    std::iota(p.begin(), p.end(), 0);
    for (int round = 0; round < 100; ++round) {
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(canonical_form(relabel(base, p)) == expected);
    }
  }
}

TEST_CASE("canonical form is the least edge list over relabelings") {
  std::mt19937 rng(7);
  for (const CubicGraph& g : {fixtures::utility(), fixtures::petersen(), fixtures::bridged10()}) {
    EdgeList canon = canonical_form(g).edges;
    std::vector<int> p(g.n());
    std::iota(p.begin(), p.end(), 0);
    for (int round = 0; round < 200; ++round) {
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(canon <= relabel(g, p).edges());
    }
  }
}

TEST_CASE("canonical witness maps the graph onto its canonical form") {
  for (const CubicGraph& g : {fixtures::prism3(), fixtures::petersen()}) {
    CanonicalForm cf = canonical_form(g);
    CHECK(relabel(g, cf.witness).edges() == cf.edges);
  }
}

TEST_CASE("isomorphism distinguishes the named pairs") {
  CHECK(are_isomorphic(fixtures::k4(), relabel(fixtures::k4(), {2, 0, 3, 1})));
  CHECK_FALSE(are_isomorphic(fixtures::utility(), fixtures::prism3()));
  CHECK(canonical_form(fixtures::utility()).edges != canonical_form(fixtures::prism3()).edges);
  // Petersen and the 10-vertex ladder: girths 5 and 4.
  CubicGraph ladder(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                         {8, 9}, {0, 9}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  CHECK_FALSE(are_isomorphic(fixtures::petersen(), ladder));
  CHECK(oracles::shortest_cycle_length(fixtures::petersen()) == 5);
  CHECK(oracles::shortest_cycle_length(ladder) == 4);
}

TEST_CASE("edge-list text round trips") {
  std::string text = "# a comment\n6\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
  auto [n, edges] = parse_edge_list(text);
  CubicGraph g(n, edges);
  CHECK(are_isomorphic(g, fixtures::utility()));
  auto [n2, edges2] = parse_edge_list(format_edge_list(g));
  CHECK(n2 == n);
  CHECK(CubicGraph(n2, edges2) == g);
}
