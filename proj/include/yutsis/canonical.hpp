#pragma once

#include <vector>

#include "yutsis/graph.hpp"

namespace yutsis {

// Canonical relabeling of a cubic graph: the lexicographically least edge
// list over all vertex relabelings, plus one permutation achieving it.
// Two graphs have equal canonical edge lists iff they are isomorphic.
struct CanonicalForm {
  EdgeList edges;
  std::vector<int> witness;  // witness[original vertex] = canonical label

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.edges == b.edges;
  }
};

CanonicalForm canonical_form(const CubicGraph& g);

bool are_isomorphic(const CubicGraph& a, const CubicGraph& b);

// Relabel: edge {u, v} becomes {perm[u], perm[v]}. perm must be a bijection
// on 0..n-1.
CubicGraph relabel(const CubicGraph& g, const std::vector<int>& perm);

}  // namespace yutsis
