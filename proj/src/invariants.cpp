#include "yutsis/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace yutsis {

int wiener(const CubicGraph& g) {
  DistanceMatrix d = all_pairs_distances(g);
  int sum = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) sum += d.at(u, v);
  return sum;
}

int diameter(const CubicGraph& g) { return all_pairs_distances(g).max(); }

int girth(const CubicGraph& g) {
  // BFS from every root; a non-tree edge (u, w) closes a cycle of length
  // dist[u] + dist[w] + 1. The minimum over all roots is exact: rooting at a
  // vertex of a shortest cycle makes its distances tight along the cycle.
  const int n = g.n();
  int best = n + 1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (2 * dist[u] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

std::vector<double> adjacency_eigenvalues(const CubicGraph& g) {
  const int n = g.n();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (const Edge& e : g.edges()) {
    at(e.u, e.v) = 1.0;
    at(e.v, e.u) = 1.0;
  }

  const double threshold = 1e-12;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (std::sqrt(2.0 * off) < threshold) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = at(i, i);
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  throw Error(ErrorCode::EigenNonConvergence, "Jacobi sweeps did not converge");
}

double estrada(const CubicGraph& g) {
  double sum = 0.0;
  for (double lambda : adjacency_eigenvalues(g)) sum += std::exp(lambda);
  return sum;
}

std::int64_t scale_estrada(double ee) { return std::llround(ee * 1e5); }

InvariantKey invariant_key(const CubicGraph& g) {
  DistanceMatrix d = all_pairs_distances(g);
  int w = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) w += d.at(u, v);
  return InvariantKey{w, d.max(), girth(g), scale_estrada(estrada(g))};
}

std::string InvariantKey::to_string() const {
  std::ostringstream out;
  out << "W" << wiener << " d" << diameter << " g" << girth << " EE" << estrada_scaled / 100000 << ".";
  std::int64_t frac = estrada_scaled % 100000;
  for (std::int64_t place = 10000; place >= 1; place /= 10) out << frac / place % 10;
  return out.str();
}

}  // namespace yutsis
