#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "yutsis/connectivity.hpp"
#include "yutsis/graph.hpp"
#include "yutsis/invariants.hpp"

namespace yutsis {

// One graph of the catalog. `ordinal` is the 1-based position within the
// full canonical enumeration of its vertex count, so it stays stable when a
// stratum is filtered down to the irreducible subset.
struct CatalogEntry {
  int n = 0;
  int ordinal = 0;
  std::string class_tag;            // C1, C2, C3R, IRR4, IRR5, ..., IRR*
  std::optional<std::string> lcf;   // absent iff non-Hamiltonian
  InvariantKey key;
  EdgeList edges;                   // canonical edge list
};

struct Catalog {
  std::vector<CatalogEntry> entries;

  std::vector<const CatalogEntry*> stratum(int n) const;
};

CatalogEntry make_entry(const CubicGraph& g, int ordinal);

// Catalog for all even n in [4, max_n]. When irreducible_only_at is set,
// that stratum keeps only its irreducible entries.
Catalog build_catalog(int max_n, std::optional<int> irreducible_only_at = std::nullopt);

// Line-oriented, tab-separated persistence; writing is byte-stable.
void save_catalog(const Catalog& catalog, std::ostream& out);
Catalog load_catalog(std::istream& in);

// Entry isomorphic to g, via the LCF signature when g is Hamiltonian and
// canonical-form comparison otherwise. Throws NotFound.
const CatalogEntry& lookup(const Catalog& catalog, const CubicGraph& g);

std::string format_entry_edges(const EdgeList& edges);  // "0-1,0-2,..."
EdgeList parse_entry_edges(const std::string& text);

}  // namespace yutsis
