#include "yutsis/enumerate.hpp"

#include <algorithm>

#include "yutsis/canonical.hpp"

namespace yutsis {

namespace {

// Orderly generation. Vertices are saturated in increasing order; partners
// of the current vertex are chosen with increasing labels, and a previously
// untouched vertex always receives the smallest unused label. Every labeled
// graph produced this way lists its edges in sorted order, and every
// isomorphism class is reached by at least its canonical labeling, so a
// completed graph is kept iff it equals its own canonical form. That makes
// the output duplicate-free without storing any lookup structure.
class Generator {
 public:
  Generator(int n, std::vector<CubicGraph>& out) : n_(n), out_(out), deg_(n, 0) {
    adj_.assign(n, {-1, -1, -1});
    edges_.reserve(3 * n / 2);
  }

  void run() { saturate(0, 1); }

 private:
  bool adjacent(int u, int v) const {
    return adj_[u][0] == v || adj_[u][1] == v || adj_[u][2] == v;
  }

  void add_edge(int u, int v) {
    adj_[u][deg_[u]++] = v;
    adj_[v][deg_[v]++] = u;
    edges_.emplace_back(u, v);
  }

  void remove_edge(int u, int v) {
    adj_[u][--deg_[u]] = -1;
    adj_[v][--deg_[v]] = -1;
    edges_.pop_back();
  }

  void emit() {
    CubicGraph g(n_, edges_);
    if (canonical_form(g).edges == g.edges()) out_.push_back(std::move(g));
  }

  void saturate(int u, int minv) {
    if (deg_[u] == 3) {
      if (u + 1 == n_) {
        emit();
        return;
      }
      // Advancing past the last unsaturated used vertex while unused labels
      // remain would close off a component.
      bool frontier = false;
      for (int w = u + 1; w < used_; ++w)
        if (deg_[w] < 3) {
          frontier = true;
          break;
        }
      if (!frontier && used_ < n_) return;
      saturate(u + 1, u + 2);
      return;
    }

    const int need = 3 - deg_[u];
    int candidates = n_ - used_;
    for (int w = std::max(minv, u + 1); w < used_; ++w)
      if (deg_[w] < 3 && !adjacent(u, w)) ++candidates;
    if (candidates < need) return;

    for (int v = std::max(minv, u + 1); v < used_; ++v) {
      if (deg_[v] == 3 || adjacent(u, v)) continue;
      add_edge(u, v);
      saturate(u, v + 1);
      remove_edge(u, v);
    }
    if (used_ < n_) {
      int v = used_++;
      add_edge(u, v);
      saturate(u, v + 1);
      remove_edge(u, v);
      --used_;
    }
  }

  int n_;
  std::vector<CubicGraph>& out_;
  std::vector<int> deg_;
  std::vector<std::array<int, 3>> adj_;
  EdgeList edges_;
  int used_ = 1;
};

}  // namespace

std::vector<CubicGraph> enumerate_cubic(int n) {
  if (n % 2 != 0)
    throw Error(ErrorCode::OddVertexCount, "no cubic graphs on an odd vertex count");
  if (n < 4) throw Error(ErrorCode::TooSmall, "smallest cubic graph has 4 vertices");

  std::vector<CubicGraph> out;
  Generator gen(n, out);
  gen.run();
  std::sort(out.begin(), out.end(),
            [](const CubicGraph& a, const CubicGraph& b) { return a.edges() < b.edges(); });
  return out;
}

}  // namespace yutsis
