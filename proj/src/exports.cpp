#include "yutsis/exports.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

#include "yutsis/connectivity.hpp"

namespace yutsis {

namespace {

std::string dot_body(const std::vector<std::pair<int, int>>& arcs, const std::set<Edge>& red) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& [t, h] : arcs) {
    out << "  " << t << " -> " << h;
    if (red.count(Edge(t, h))) out << " [color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::set<Edge> witness_edges(const CubicGraph& g) {
  std::set<Edge> red;
  if (g.connected()) {
    YutsisClass cls = classify(g);
    if (cls.witness)
      red.insert(cls.witness->edges.begin(), cls.witness->edges.end());
  }
  return red;
}

}  // namespace

std::string export_dot(const CubicGraph& g) {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(g.edges().size());
  for (const Edge& e : g.edges()) arcs.emplace_back(e.u, e.v);
  return dot_body(arcs, witness_edges(g));
}

std::string export_dot(const DirectedCubicGraph& g) {
  return dot_body(g.arcs(), witness_edges(g.base()));
}

std::string export_smiles(const CubicGraph& g, const HamiltonianCycle& c) {
  check_cycle(g, c);
  const int n = g.n();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[c[i]] = i;

  // Non-chain bonds in cycle-position order; index in this list + 1 is the
  // closure number.
  std::vector<std::pair<int, int>> closures;
  for (const Edge& e : g.edges()) {
    int a = pos[e.u], b = pos[e.v];
    if (a > b) std::swap(a, b);
    if (b - a == 1) continue;  // chain bond
    closures.emplace_back(a, b);
  }
  std::sort(closures.begin(), closures.end());

  std::ostringstream out;
  for (int i = 0; i < n; ++i) {
    out << 'C';
    for (std::size_t k = 0; k < closures.size(); ++k) {
      if (closures[k].first != i && closures[k].second != i) continue;
      int number = static_cast<int>(k) + 1;
      if (number > 9) out << '%';
      out << number;
    }
  }
  return out.str();
}

EdgeList parse_smiles_bonds(const std::string& smiles) {
  EdgeList bonds;
  std::vector<int> open(100, -1);
  int atom = -1;
  std::size_t i = 0;
  while (i < smiles.size()) {
    char ch = smiles[i];
    if (ch == 'C') {
      if (atom >= 0) bonds.emplace_back(atom, atom + 1);
      ++atom;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '%') {
      int number;
      if (ch == '%') {
        if (i + 2 >= smiles.size()) throw Error(ErrorCode::ParseError, "truncated '%' closure");
        number = (smiles[i + 1] - '0') * 10 + (smiles[i + 2] - '0');
        i += 3;
      } else {
        number = ch - '0';
        ++i;
      }
      if (atom < 0) throw Error(ErrorCode::ParseError, "ring closure before any atom");
      if (open[number] < 0) {
        open[number] = atom;
      } else {
        bonds.emplace_back(open[number], atom);
        open[number] = -1;
      }
    } else {
      throw Error(ErrorCode::ParseError, std::string("unexpected character '") + ch + "' in SMILES");
    }
  }
  for (int v : open)
    if (v >= 0) throw Error(ErrorCode::ParseError, "unmatched ring closure");
  std::sort(bonds.begin(), bonds.end());
  return bonds;
}

std::string export_molfile(const CubicGraph& g, const std::optional<Coordinates>& coordinates) {
  const int n = g.n();
  if (coordinates && static_cast<int>(coordinates->xyz.size()) != n)
    throw Error(ErrorCode::ParseError, "coordinate count must match the vertex count");

  std::ostringstream out;
  out << "cubic graph n=" << n << "\n  yutsis\n\n";
  char buf[128];
  std::snprintf(buf, sizeof buf, "%3d%3d  0  0  0  0  0  0  0  0999 V2000\n", n,
                static_cast<int>(g.edges().size()));
  out << buf;
  for (int v = 0; v < n; ++v) {
    double x = 0, y = 0, z = 0;
    if (coordinates) {
      x = coordinates->xyz[v][0];
      y = coordinates->xyz[v][1];
      z = coordinates->xyz[v][2];
    }
    std::snprintf(buf, sizeof buf,
                  "%10.4f%10.4f%10.4f C   0  0  0  0  0  0  0  0  0  0  0  0\n", x, y, z);
    out << buf;
  }
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "%3d%3d  1  0\n", e.u + 1, e.v + 1);
    out << buf;
  }
  out << "M  END\n";
  return out.str();
}

}  // namespace yutsis
