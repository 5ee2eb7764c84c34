#pragma once

#include <optional>
#include <string>
#include <utility>

#include "yutsis/graph.hpp"

namespace yutsis {

enum class YutsisTag {
  OneConnected,
  TwoConnected,
  ThreeConnectedReducible,
  Irreducible,
};

// A minimum edge cut meeting the class criterion, for display. Removing the
// edges splits the graph into two connected parts of the given sizes.
struct CutWitness {
  EdgeList edges;
  std::pair<int, int> side_sizes;  // smaller side first
};

struct YutsisClass {
  YutsisTag tag;
  // Present iff tag == Irreducible and some cut separates two cycles.
  std::optional<int> cyclic_connectivity;
  // Present iff the graph is reducible.
  std::optional<CutWitness> witness;

  // C1, C2, C3R, IRR4, IRR5, ... and IRR* when no cyclic cut exists.
  std::string tag_string() const;
};

// Minimum number of edges whose removal disconnects the graph; 1..3 for
// connected cubic graphs.
int edge_connectivity(const CubicGraph& g);

// Minimum size of an edge cut whose removal leaves two components that each
// contain a cycle; nullopt when the graph has no two disjoint cycles (K4,
// the utility graph).
std::optional<int> cyclic_edge_connectivity(const CubicGraph& g);

YutsisClass classify(const CubicGraph& g);

int class_rank(YutsisTag tag);
YutsisTag tag_from_string(const std::string& s);

}  // namespace yutsis
