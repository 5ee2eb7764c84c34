#include "yutsis/wigner.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "yutsis/canonical.hpp"
#include "yutsis/lcf.hpp"

namespace yutsis {

namespace {

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

}  // namespace

WignerSum parse_wigner(const std::string& text) {
  WignerSum sum;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3)
      throw Error(ErrorCode::FactorArity, "line " + std::to_string(line_no) + ": a 3jm factor has 3 columns, got " +
                                              std::to_string(tokens.size()));
    WignerFactor factor;
    factor.line = line_no;
    for (int i = 0; i < 3; ++i) {
      const std::string& t = tokens[i];
      if (t.size() < 2 || (t[0] != '+' && t[0] != '-') ||
          !std::all_of(t.begin() + 1, t.end(), label_char))
        throw Error(ErrorCode::BadToken,
                    "line " + std::to_string(line_no) + ": '" + t + "' is not '+label' or '-label'");
      factor.columns[i] = {t[0] == '+', t.substr(1)};
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (factor.columns[i].label == factor.columns[j].label)
          throw Error(ErrorCode::LabelRepeatInFactor, "line " + std::to_string(line_no) + ": label '" +
                                                          factor.columns[i].label + "' repeats within one factor");
    sum.factors.push_back(std::move(factor));
  }

  if (sum.factors.size() % 2 != 0)
    throw Error(ErrorCode::OddFactorCount,
                std::to_string(sum.factors.size()) + " factors; a closed product needs an even count");

  struct Occurrence {
    int count = 0;
    int plus = 0;
  };
  std::map<std::string, Occurrence> seen;
  for (const WignerFactor& f : sum.factors)
    for (const WignerColumn& c : f.columns) {
      auto& occ = seen[c.label];
      ++occ.count;
      if (c.positive) ++occ.plus;
    }
  for (const auto& [label, occ] : seen) {
    if (occ.count != 2)
      throw Error(ErrorCode::LabelCount,
                  "label '" + label + "' occurs " + std::to_string(occ.count) + " times, need exactly 2");
    if (occ.plus != 1)
      throw Error(ErrorCode::SameSignPair, "label '" + label + "' occurs twice with the " +
                                               (occ.plus == 2 ? "'+'" : "'-'") + " sign");
  }
  return sum;
}

DirectedCubicGraph sum_to_graph(const WignerSum& sum) {
  const int n = static_cast<int>(sum.factors.size());
  struct End {
    int factor = -1;
    bool positive = true;
  };
  std::map<std::string, std::vector<End>> ends;
  for (int i = 0; i < n; ++i)
    for (const WignerColumn& c : sum.factors[i].columns) ends[c.label].push_back({i, c.positive});

  std::vector<std::pair<int, int>> arcs;
  for (const auto& [label, pair] : ends) {
    int tail = pair[0].positive ? pair[0].factor : pair[1].factor;
    int head = pair[0].positive ? pair[1].factor : pair[0].factor;
    arcs.emplace_back(tail, head);
  }
  std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
    return Edge(a.first, a.second) < Edge(b.first, b.second);
  });
  for (std::size_t i = 1; i < arcs.size(); ++i)
    if (Edge(arcs[i].first, arcs[i].second) == Edge(arcs[i - 1].first, arcs[i - 1].second))
      throw Error(ErrorCode::MultiEdge,
                  "factors " + std::to_string(arcs[i].first) + " and " + std::to_string(arcs[i].second) +
                      " share two labels; such products are outside the simple-graph catalog");

  EdgeList edges;
  edges.reserve(arcs.size());
  for (const auto& [t, h] : arcs) edges.emplace_back(t, h);
  return DirectedCubicGraph(CubicGraph(n, std::move(edges)), std::move(arcs));
}

std::string symbol_name(const CatalogEntry& entry) {
  std::string base = std::to_string(3 * entry.n / 2) + "j";
  if (entry.n == 4) return base;

  std::string qualifier;
  switch (tag_from_string(entry.class_tag)) {
    case YutsisTag::OneConnected: qualifier = "1-connected"; break;
    case YutsisTag::TwoConnected: qualifier = "2-connected"; break;
    case YutsisTag::ThreeConnectedReducible: qualifier = "3-connected reducible"; break;
    case YutsisTag::Irreducible: qualifier = "irreducible"; break;
  }

  if (entry.n == 10 && entry.class_tag.rfind("IRR", 0) == 0) {
    // The five 15j kinds: the ladder is the 1st, the non-Hamiltonian
    // Petersen graph the 5th, and two more have short signatures; the
    // remaining graph is the 2nd kind.
    static const std::pair<const char*, const char*> kKinds[] = {
        {"[5]^10", "1st"},
        {"[5,-4,4,-4,4]^2", "3rd"},
        {"[5,5,-4,4,5]^2", "4th"},
    };
    std::string kind = entry.lcf ? "2nd" : "5th";
    if (entry.lcf) {
      for (const auto& [text, name] : kKinds)
        if (*canonical_lcf(decode(text).first) == *entry.lcf) kind = name;
    }
    return base + " (" + qualifier + ", " + kind + " kind)";
  }
  return base + " (" + qualifier + ")";
}

IdentifyResult identify(const WignerSum& sum, const Catalog& catalog) {
  DirectedCubicGraph dg = sum_to_graph(sum);
  if (!dg.base().connected())
    throw Error(ErrorCode::Disconnected, "the sum factorizes into independent products");
  const CatalogEntry* entry;
  try {
    entry = &lookup(catalog, dg.base());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotFound)
      throw Error(ErrorCode::NotInCatalog,
                  "no stratum for " + std::to_string(dg.base().n()) + " factors in this catalog");
    throw;
  }
  return {entry, symbol_name(*entry)};
}

}  // namespace yutsis
