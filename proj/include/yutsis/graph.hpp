#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "yutsis/error.hpp"

namespace yutsis {

// Undirected edge, normalized to u < v on construction.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// Shortest-path lengths between all pairs of vertices.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

  int n() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  int& at(int u, int v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  int max() const;

 private:
  int n_;
  std::vector<int> d_;
};

// Simple 3-regular graph on n vertices labeled 0..n-1. Immutable after
// construction; the edge list is kept sorted by (u, v) so every derived
// serialization is deterministic. Construction validates regularity and
// simplicity; connectivity is recorded as a flag rather than rejected, since
// cut analysis needs to look at graphs after edge removal.
class CubicGraph {
 public:
  CubicGraph(int n, EdgeList edges);

  int n() const { return n_; }
  const EdgeList& edges() const { return edges_; }
  const std::array<int, 3>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  bool connected() const { return connected_; }

  // Bitmask of neighbors, valid for n <= 64 (always true for catalog sizes).
  std::uint64_t neighbor_mask(int v) const { return mask_[v]; }

  friend bool operator==(const CubicGraph& a, const CubicGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  EdgeList edges_;
  std::vector<std::array<int, 3>> adj_;
  std::vector<std::uint64_t> mask_;
  bool connected_;
};

// Cubic graph plus one orientation per edge. arc(i) orients edges()[i].
class DirectedCubicGraph {
 public:
  DirectedCubicGraph(CubicGraph base, std::vector<std::pair<int, int>> arcs);

  const CubicGraph& base() const { return base_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

 private:
  CubicGraph base_;
  std::vector<std::pair<int, int>> arcs_;
};

// Exact breadth-first shortest paths. Throws Disconnected.
DistanceMatrix all_pairs_distances(const CubicGraph& g);

// Edge-list text format: '#' comment lines, first data line n, then one
// "u v" pair per line.
std::pair<int, EdgeList> parse_edge_list(const std::string& text);
std::string format_edge_list(const CubicGraph& g);

}  // namespace yutsis
