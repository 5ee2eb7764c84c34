#include "yutsis/catalog.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "yutsis/canonical.hpp"
#include "yutsis/enumerate.hpp"
#include "yutsis/lcf.hpp"

namespace yutsis {

namespace {

constexpr const char* kHeader = "# yutsis-catalog v1";
constexpr const char* kNonHamiltonian = "NONHAM";

std::int64_t parse_estrada_text(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos || s.size() - dot - 1 != 5)
    throw Error(ErrorCode::ParseError, "Estrada field needs exactly 5 decimals: '" + s + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.')
      throw Error(ErrorCode::ParseError, "bad Estrada field '" + s + "'");
  return std::stoll(s.substr(0, dot)) * 100000 + std::stoll(s.substr(dot + 1));
}

}  // namespace

std::vector<const CatalogEntry*> Catalog::stratum(int n) const {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : entries)
    if (e.n == n) out.push_back(&e);
  return out;
}

CatalogEntry make_entry(const CubicGraph& g, int ordinal) {
  CatalogEntry entry;
  entry.n = g.n();
  entry.ordinal = ordinal;
  entry.class_tag = classify(g).tag_string();
  entry.lcf = canonical_lcf(g);
  entry.key = invariant_key(g);
  entry.edges = canonical_form(g).edges;
  return entry;
}

Catalog build_catalog(int max_n, std::optional<int> irreducible_only_at) {
  if (max_n < 4) throw Error(ErrorCode::TooSmall, "catalog starts at 4 vertices");
  if (max_n % 2 != 0) throw Error(ErrorCode::OddVertexCount, "catalog strata have even vertex counts");
  Catalog catalog;
  for (int n = 4; n <= max_n; n += 2) {
    std::vector<CubicGraph> graphs = enumerate_cubic(n);
    std::vector<CatalogEntry> stratum;
    stratum.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i)
      stratum.push_back(make_entry(graphs[i], static_cast<int>(i) + 1));
    if (irreducible_only_at && *irreducible_only_at == n)
      std::erase_if(stratum, [](const CatalogEntry& e) { return e.class_tag.rfind("IRR", 0) != 0; });
    std::stable_sort(stratum.begin(), stratum.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
      int ra = class_rank(tag_from_string(a.class_tag));
      int rb = class_rank(tag_from_string(b.class_tag));
      if (ra != rb) return ra < rb;
      return a.ordinal < b.ordinal;
    });
    for (CatalogEntry& e : stratum) catalog.entries.push_back(std::move(e));
  }
  return catalog;
}

std::string format_entry_edges(const EdgeList& edges) {
  std::ostringstream out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out << ',';
    out << edges[i].u << '-' << edges[i].v;
  }
  return out.str();
}

EdgeList parse_entry_edges(const std::string& text) {
  EdgeList edges;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos)
      throw Error(ErrorCode::ParseError, "bad edge item '" + item + "'");
    edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return edges;
}

void save_catalog(const Catalog& catalog, std::ostream& out) {
  out << kHeader << "\n";
  for (const CatalogEntry& e : catalog.entries) {
    out << e.n << '\t' << e.ordinal << '\t' << e.class_tag << '\t'
        << (e.lcf ? *e.lcf : kNonHamiltonian) << '\t' << e.key.wiener << '\t' << e.key.diameter
        << '\t' << e.key.girth << '\t';
    std::string key = e.key.to_string();
    out << key.substr(key.find("EE") + 2) << '\t' << format_entry_edges(e.edges) << "\n";
  }
}

Catalog load_catalog(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw Error(ErrorCode::ParseError, "missing catalog header");
  Catalog catalog;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, '\t')) fields.push_back(field);
    if (fields.size() != 9)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 9 fields");
    CatalogEntry e;
    e.n = std::stoi(fields[0]);
    e.ordinal = std::stoi(fields[1]);
    e.class_tag = fields[2];
    if (fields[3] != kNonHamiltonian) e.lcf = fields[3];
    e.key.wiener = std::stoi(fields[4]);
    e.key.diameter = std::stoi(fields[5]);
    e.key.girth = std::stoi(fields[6]);
    e.key.estrada_scaled = parse_estrada_text(fields[7]);
    e.edges = parse_entry_edges(fields[8]);
    catalog.entries.push_back(std::move(e));
  }
  return catalog;
}

const CatalogEntry& lookup(const Catalog& catalog, const CubicGraph& g) {
  std::optional<std::string> lcf = canonical_lcf(g);
  if (lcf) {
    for (const CatalogEntry& e : catalog.entries)
      if (e.n == g.n() && e.lcf && *e.lcf == *lcf) return e;
  } else {
    EdgeList canon = canonical_form(g).edges;
    for (const CatalogEntry& e : catalog.entries)
      if (e.n == g.n() && e.edges == canon) return e;
  }
  throw Error(ErrorCode::NotFound, "no catalog entry for this graph (stratum n=" +
                                       std::to_string(g.n()) + " missing or filtered)");
}

}  // namespace yutsis
