#include "yutsis/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace yutsis {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddVertexCount: return "OddVertexCount";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::Loop: return "Loop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NonHamiltonian: return "NonHamiltonian";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IllegalDistance: return "IllegalDistance";
    case ErrorCode::InconsistentChords: return "InconsistentChords";
    case ErrorCode::ChordCollision: return "ChordCollision";
    case ErrorCode::BadToken: return "BadToken";
    case ErrorCode::FactorArity: return "FactorArity";
    case ErrorCode::LabelRepeatInFactor: return "LabelRepeatInFactor";
    case ErrorCode::LabelCount: return "LabelCount";
    case ErrorCode::SameSignPair: return "SameSignPair";
    case ErrorCode::OddFactorCount: return "OddFactorCount";
    case ErrorCode::MultiEdge: return "MultiEdge";
    case ErrorCode::NotInCatalog: return "NotInCatalog";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::EigenNonConvergence: return "EigenNonConvergence";
  }
  return "UnknownError";
}

int DistanceMatrix::max() const {
  int m = 0;
  for (int x : d_) m = std::max(m, x);
  return m;
}

CubicGraph::CubicGraph(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 4) throw Error(ErrorCode::TooSmall, "need at least 4 vertices, got " + std::to_string(n_));
  if (n_ % 2 != 0)
    throw Error(ErrorCode::OddVertexCount, "3-regular graphs need an even vertex count, got " + std::to_string(n_));
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw Error(ErrorCode::Loop, "loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_)
      throw Error(ErrorCode::WrongDegree, "edge endpoint out of range: " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i] == edges_[i - 1])
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge " + std::to_string(edges_[i].u) + "-" + std::to_string(edges_[i].v));

  std::vector<int> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int v = 0; v < n_; ++v)
    if (deg[v] != 3)
      throw Error(ErrorCode::WrongDegree,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]));

  adj_.assign(n_, {0, 0, 0});
  mask_.assign(n_, 0);
  std::vector<int> fill(n_, 0);
  for (const Edge& e : edges_) {
    adj_[e.u][fill[e.u]++] = e.v;
    adj_[e.v][fill[e.v]++] = e.u;
    if (n_ <= 64) {
      mask_[e.u] |= std::uint64_t{1} << e.v;
      mask_[e.v] |= std::uint64_t{1} << e.u;
    }
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  // BFS from 0 for the connectivity flag.
  std::vector<char> seen(n_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  connected_ = (reached == n_);
}

bool CubicGraph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return a[0] == v || a[1] == v || a[2] == v;
}

DirectedCubicGraph::DirectedCubicGraph(CubicGraph base, std::vector<std::pair<int, int>> arcs)
    : base_(std::move(base)), arcs_(std::move(arcs)) {
  if (arcs_.size() != base_.edges().size())
    throw Error(ErrorCode::WrongDegree, "orientation must cover every edge exactly once");
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    Edge e(arcs_[i].first, arcs_[i].second);
    if (!(e == base_.edges()[i]))
      throw Error(ErrorCode::WrongDegree, "arc does not match edge " + std::to_string(i));
  }
}

DistanceMatrix all_pairs_distances(const CubicGraph& g) {
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "distances need a connected graph");
  const int n = g.n();
  DistanceMatrix d(n);
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
    }
    for (int v = 0; v < n; ++v) d.at(s, v) = dist[v];
  }
  return d;
}

std::pair<int, EdgeList> parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  EdgeList edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (ls >> n) {
        int extra;
        if (ls >> extra)
          throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected vertex count only");
      } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected vertex count");
      }
      continue;
    }
    int u, v;
    if (ls >> u) {
      if (!(ls >> v))
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
      edges.emplace_back(u, v);
    } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "missing vertex count line");
  return {n, edges};
}

std::string format_edge_list(const CubicGraph& g) {
  std::ostringstream out;
  out << g.n() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

}  // namespace yutsis
