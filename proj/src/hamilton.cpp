#include "yutsis/hamilton.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace yutsis {

namespace {

// Depth-first walk from vertex 0. The cubic degree bound keeps the branching
// at two once the walk has left its start, so no further pruning is needed
// at catalog sizes. Each geometric cycle is reached in both directions;
// keeping only chains with c[1] < c[n-1] leaves one representative.
struct Walker {
  const CubicGraph& g;
  int n;
  bool stop_at_first;
  std::vector<int> path;
  std::uint64_t visited = 1;
  std::vector<HamiltonianCycle> found;

  explicit Walker(const CubicGraph& graph, bool first_only)
      : g(graph), n(graph.n()), stop_at_first(first_only) {
    path.reserve(n);
    path.push_back(0);
  }

  bool extend() {
    int u = path.back();
    for (int w : g.neighbors(u)) {
      if (w == 0 && static_cast<int>(path.size()) == n) {
        if (path[1] < path[n - 1]) {
          found.push_back(path);
          if (stop_at_first) return true;
        }
        continue;
      }
      if (visited >> w & 1) continue;
      visited |= std::uint64_t{1} << w;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      visited &= ~(std::uint64_t{1} << w);
    }
    return false;
  }
};

}  // namespace

std::vector<HamiltonianCycle> hamiltonian_cycles(const CubicGraph& g) {
  if (g.n() > 64) throw std::length_error("cycle walks support at most 64 vertices");
  Walker walker(g, false);
  walker.extend();
  std::sort(walker.found.begin(), walker.found.end());
  return std::move(walker.found);
}

bool is_hamiltonian(const CubicGraph& g) {
  if (g.n() > 64) throw std::length_error("cycle walks support at most 64 vertices");
  Walker walker(g, true);
  return walker.extend();
}

void check_cycle(const CubicGraph& g, const HamiltonianCycle& c) {
  const int n = g.n();
  if (static_cast<int>(c.size()) != n)
    throw Error(ErrorCode::NotACycle, "chain visits " + std::to_string(c.size()) + " of " +
                                          std::to_string(n) + " vertices");
  std::vector<char> seen(n, 0);
  for (int v : c) {
    if (v < 0 || v >= n || seen[v]) throw Error(ErrorCode::NotACycle, "chain is not a permutation of the vertices");
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.adjacent(c[i], c[(i + 1) % n]))
      throw Error(ErrorCode::NotACycle, "chain uses the non-edge " + std::to_string(c[i]) + "-" +
                                            std::to_string(c[(i + 1) % n]));
}

}  // namespace yutsis
