#include "yutsis/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace yutsis {

namespace {

using std::uint64_t;

// Sweeps run over vertex bipartitions with vertex 0 pinned to one side,
// which is exhaustive and exact at catalog sizes (2^13 masks at n = 14).
struct Sweep {
  const CubicGraph& g;
  int n;

  int cut_size(uint64_t side_b) const {
    int cut = 0;
    for (int v = 0; v < n; ++v)
      if (side_b >> v & 1) cut += std::popcount(g.neighbor_mask(v) & ~side_b);
    return cut;
  }

  EdgeList cut_edges(uint64_t side_b) const {
    EdgeList cut;
    for (const Edge& e : g.edges())
      if (((side_b >> e.u) & 1) != ((side_b >> e.v) & 1)) cut.push_back(e);
    return cut;
  }

  // True iff some component of the subgraph induced on `side` has at least
  // as many edges as vertices, i.e. contains a cycle.
  bool side_has_cycle(uint64_t side) const {
    uint64_t todo = side;
    while (todo) {
      int s = std::countr_zero(todo);
      uint64_t comp = uint64_t{1} << s;
      uint64_t frontier = comp;
      while (frontier) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
          int v = std::countr_zero(f);
          f &= f - 1;
          next |= g.neighbor_mask(v) & side & ~comp;
        }
        comp |= next;
        frontier = next;
      }
      int vc = std::popcount(comp);
      int ec = 0;
      uint64_t c = comp;
      while (c) {
        int v = std::countr_zero(c);
        c &= c - 1;
        ec += std::popcount(g.neighbor_mask(v) & comp);
      }
      ec /= 2;
      if (ec >= vc) return true;
      todo &= ~comp;
    }
    return false;
  }
};

void check_connected(const CubicGraph& g) {
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "classification needs a connected graph");
  if (g.n() > 62) throw std::length_error("cut sweeps support at most 62 vertices");
}

}  // namespace

int edge_connectivity(const CubicGraph& g) {
  check_connected(g);
  const int n = g.n();
  Sweep sweep{g, n};
  int best = 3;  // removing one vertex star always works
  const uint64_t limit = uint64_t{1} << (n - 1);
  for (uint64_t m = 1; m < limit && best > 1; ++m) {
    uint64_t side_b = m << 1;  // vertex 0 stays on side a
    best = std::min(best, sweep.cut_size(side_b));
  }
  return best;
}

std::optional<int> cyclic_edge_connectivity(const CubicGraph& g) {
  check_connected(g);
  const int n = g.n();
  Sweep sweep{g, n};
  const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  const uint64_t limit = uint64_t{1} << (n - 1);
  std::optional<int> best;
  for (uint64_t m = 1; m < limit; ++m) {
    uint64_t side_b = m << 1;
    int cut = sweep.cut_size(side_b);
    if (best && cut >= *best) continue;
    if (sweep.side_has_cycle(side_b) && sweep.side_has_cycle(all & ~side_b)) best = cut;
  }
  return best;
}

YutsisClass classify(const CubicGraph& g) {
  check_connected(g);
  const int n = g.n();
  Sweep sweep{g, n};
  const uint64_t limit = uint64_t{1} << (n - 1);

  // Minimum cut, then minimum cut with both sides >= 2 vertices. Witnesses
  // take the lexicographically least edge set among minimum cuts.
  int lambda = 3;
  std::optional<EdgeList> lambda_cut;
  uint64_t lambda_side = 0;
  int nontrivial = 4;
  std::optional<EdgeList> nontrivial_cut;
  uint64_t nontrivial_side = 0;

  for (uint64_t m = 1; m < limit; ++m) {
    uint64_t side_b = m << 1;
    int cut = sweep.cut_size(side_b);
    if (cut <= lambda) {
      EdgeList edges = sweep.cut_edges(side_b);
      if (cut < lambda || !lambda_cut || edges < *lambda_cut) {
        lambda = cut;
        lambda_cut = std::move(edges);
        lambda_side = side_b;
      }
    }
    if (cut <= 3 && cut <= nontrivial) {
      int sb = std::popcount(side_b);
      if (sb >= 2 && n - sb >= 2) {
        EdgeList edges = sweep.cut_edges(side_b);
        if (cut < nontrivial || !nontrivial_cut || edges < *nontrivial_cut) {
          nontrivial = cut;
          nontrivial_cut = std::move(edges);
          nontrivial_side = side_b;
        }
      }
    }
  }

  auto witness = [&](const EdgeList& edges, uint64_t side_b) {
    int b = std::popcount(side_b);
    int a = n - b;
    return CutWitness{edges, {std::min(a, b), std::max(a, b)}};
  };

  YutsisClass result;
  if (lambda == 1) {
    result.tag = YutsisTag::OneConnected;
    result.witness = witness(*lambda_cut, lambda_side);
  } else if (lambda == 2) {
    result.tag = YutsisTag::TwoConnected;
    result.witness = witness(*lambda_cut, lambda_side);
  } else if (nontrivial_cut && nontrivial == 3) {
    result.tag = YutsisTag::ThreeConnectedReducible;
    result.witness = witness(*nontrivial_cut, nontrivial_side);
  } else {
    result.tag = YutsisTag::Irreducible;
    result.cyclic_connectivity = cyclic_edge_connectivity(g);
  }
  return result;
}

std::string YutsisClass::tag_string() const {
  switch (tag) {
    case YutsisTag::OneConnected: return "C1";
    case YutsisTag::TwoConnected: return "C2";
    case YutsisTag::ThreeConnectedReducible: return "C3R";
    case YutsisTag::Irreducible:
      return cyclic_connectivity ? "IRR" + std::to_string(*cyclic_connectivity) : "IRR*";
  }
  return "?";
}

int class_rank(YutsisTag tag) {
  switch (tag) {
    case YutsisTag::OneConnected: return 0;
    case YutsisTag::TwoConnected: return 1;
    case YutsisTag::ThreeConnectedReducible: return 2;
    case YutsisTag::Irreducible: return 3;
  }
  return 4;
}

YutsisTag tag_from_string(const std::string& s) {
  if (s == "C1") return YutsisTag::OneConnected;
  if (s == "C2") return YutsisTag::TwoConnected;
  if (s == "C3R") return YutsisTag::ThreeConnectedReducible;
  if (s.rfind("IRR", 0) == 0) return YutsisTag::Irreducible;
  throw Error(ErrorCode::ParseError, "unknown class tag '" + s + "'");
}

}  // namespace yutsis
