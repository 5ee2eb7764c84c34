#include "yutsis/lcf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "yutsis/canonical.hpp"

namespace yutsis {

namespace {

// Distance vector for one traversal order of a Hamiltonian cycle.
LcfVector vector_for_traversal(const CubicGraph& g, const std::vector<int>& order) {
  const int n = g.n();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  LcfVector v(n);
  for (int i = 0; i < n; ++i) {
    int u = order[i];
    int prev = order[(i + n - 1) % n];
    int next = order[(i + 1) % n];
    int chord = -1;
    for (int w : g.neighbors(u))
      if (w != prev && w != next) chord = w;
    int d = (pos[chord] - i + n) % n;
    if (d > n / 2) d -= n;
    v[i] = d;
  }
  return v;
}

int parse_int(const std::string& s, std::size_t& i) {
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw Error(ErrorCode::ParseError, "expected an integer at position " + std::to_string(i) + " in '" + s + "'");
  long value = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    value = value * 10 + (s[i++] - '0');
    if (value > 1000000) throw Error(ErrorCode::ParseError, "integer out of range in '" + s + "'");
  }
  return static_cast<int>(neg ? -value : value);
}

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace

LcfVector encode_cycle(const CubicGraph& g, const HamiltonianCycle& c) {
  check_cycle(g, c);
  return vector_for_traversal(g, c);
}

std::string contract(const LcfVector& v) {
  const int n = static_cast<int>(v.size());
  std::ostringstream out;
  auto list = [&](int count) {
    out << '[';
    for (int i = 0; i < count; ++i) {
      if (i) out << ',';
      out << v[i];
    }
  };

  for (int p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (int i = p; i < n && periodic; ++i) periodic = v[i] == v[i % p];
    if (periodic) {
      list(p);
      out << "]^" << n / p;
      return out.str();
    }
  }

  if (n % 2 == 0) {
    bool antipal = true;
    for (int i = 0; i < n / 2 && antipal; ++i) antipal = v[n - 1 - i] == -v[i];
    if (antipal) {
      list(n / 2);
      out << ";-]";
      return out.str();
    }
  }

  list(n);
  out << ']';
  return out.str();
}

LcfVector expand(const std::string& text) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '[')
    throw Error(ErrorCode::ParseError, "expected '[' in '" + text + "'");
  ++i;

  LcfVector base;
  skip_ws(text, i);
  base.push_back(parse_int(text, i));
  skip_ws(text, i);
  while (i < text.size() && text[i] == ',') {
    ++i;
    skip_ws(text, i);
    base.push_back(parse_int(text, i));
    skip_ws(text, i);
  }

  bool antipal = false;
  if (i < text.size() && text[i] == ';') {
    ++i;
    skip_ws(text, i);
    if (i >= text.size() || text[i] != '-')
      throw Error(ErrorCode::ParseError, "expected '-' after ';' in '" + text + "'");
    ++i;
    skip_ws(text, i);
    antipal = true;
  }
  if (i >= text.size() || text[i] != ']')
    throw Error(ErrorCode::ParseError, "expected ']' in '" + text + "'");
  ++i;

  int repeat = 1;
  skip_ws(text, i);
  if (i < text.size() && text[i] == '^') {
    ++i;
    skip_ws(text, i);
    repeat = parse_int(text, i);
    if (repeat < 1) throw Error(ErrorCode::ParseError, "exponent must be positive in '" + text + "'");
  }
  skip_ws(text, i);
  if (i != text.size())
    throw Error(ErrorCode::ParseError, "trailing input at position " + std::to_string(i) + " in '" + text + "'");

  LcfVector v = base;
  if (antipal)
    for (auto it = base.rbegin(); it != base.rend(); ++it) v.push_back(-*it);
  const std::size_t block = v.size();
  for (int r = 1; r < repeat; ++r)
    for (std::size_t k = 0; k < block; ++k) v.push_back(v[k]);

  const int n = static_cast<int>(v.size());
  for (int& d : v) {
    if (2 * d == -n) d = n / 2;  // same chord, normalized sign
    if (d == 0 || d == 1 || d == -1 || 2 * d > n || 2 * d <= -n)
      throw Error(ErrorCode::IllegalDistance,
                  "distance " + std::to_string(d) + " not allowed for " + std::to_string(n) + " vertices");
  }

  std::vector<int> indeg(n, 0);
  for (int j = 0; j < n; ++j) ++indeg[((j + v[j]) % n + n) % n];
  for (int t = 0; t < n; ++t)
    if (indeg[t] > 1)
      throw Error(ErrorCode::ChordCollision, "vertex " + std::to_string(t) + " receives " +
                                                 std::to_string(indeg[t]) + " chords");
  for (int j = 0; j < n; ++j) {
    int t = ((j + v[j]) % n + n) % n;
    if (((t + v[t]) % n + n) % n != j)
      throw Error(ErrorCode::InconsistentChords,
                  "chord from " + std::to_string(j) + " lands on " + std::to_string(t) +
                      " whose chord points elsewhere");
  }
  return v;
}

std::pair<CubicGraph, HamiltonianCycle> decode(const std::string& text) {
  LcfVector v = expand(text);
  const int n = static_cast<int>(v.size());
  EdgeList edges;
  edges.reserve(3 * n / 2);
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    int t = ((i + v[i]) % n + n) % n;
    if (i < t) edges.emplace_back(i, t);
  }
  HamiltonianCycle cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = i;
  return {CubicGraph(n, std::move(edges)), std::move(cycle)};
}

namespace {

// Least distance vector of one cycle over its n rotations and 2 directions.
LcfVector least_vector_for_cycle(const CubicGraph& g, const HamiltonianCycle& c) {
  const int n = g.n();
  std::vector<int> order(n);
  std::optional<LcfVector> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int rot = 0; rot < n; ++rot) {
      for (int k = 0; k < n; ++k)
        order[k] = dir == 0 ? c[(rot + k) % n] : c[(rot + n - k) % n];
      LcfVector v = vector_for_traversal(g, order);
      if (!best || v < *best) best = std::move(v);
    }
  }
  return *best;
}

}  // namespace

std::optional<std::string> canonical_lcf(const CubicGraph& g) {
  std::optional<LcfVector> best;
  for (const HamiltonianCycle& c : hamiltonian_cycles(g)) {
    LcfVector v = least_vector_for_cycle(g, c);
    if (!best || v < *best) best = std::move(v);
  }
  if (!best) return std::nullopt;
  return contract(*best);
}

std::vector<std::string> cycle_lcf_strings(const CubicGraph& g) {
  std::vector<LcfVector> vectors;
  for (const HamiltonianCycle& c : hamiltonian_cycles(g))
    vectors.push_back(least_vector_for_cycle(g, c));
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  std::vector<std::string> out;
  out.reserve(vectors.size());
  for (const LcfVector& v : vectors) out.push_back(contract(v));
  return out;
}

bool lcf_equivalent(const std::string& a, const std::string& b) {
  return are_isomorphic(decode(a).first, decode(b).first);
}

}  // namespace yutsis
