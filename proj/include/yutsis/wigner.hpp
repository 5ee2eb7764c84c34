#pragma once

#include <array>
#include <string>
#include <vector>

#include "yutsis/catalog.hpp"
#include "yutsis/graph.hpp"

namespace yutsis {

// One signed angular-momentum label: +j or -j.
struct WignerColumn {
  bool positive = true;
  std::string label;
};

// One 3jm factor: exactly three signed columns, input order preserved.
struct WignerFactor {
  std::array<WignerColumn, 3> columns;
  int line = 0;
};

// A closed product of 3jm factors: every label occurs in exactly two
// factors, once with each sign.
struct WignerSum {
  std::vector<WignerFactor> factors;
};

// Input format: one factor per line, three whitespace-separated tokens,
// each '+label' or '-label', '#' starts a comment. Labels are nonempty
// runs of letters, digits, '_' and ':'.
WignerSum parse_wigner(const std::string& text);

// Vertex per factor, edge per shared label, arcs from the '+' factor to the
// '-' factor. Rejects factor pairs sharing two labels (MultiEdge); a
// disconnected result is returned with its flag set, since the sum then
// factorizes.
DirectedCubicGraph sum_to_graph(const WignerSum& sum);

struct IdentifyResult {
  const CatalogEntry* entry;
  std::string symbol;  // "6j", "9j (irreducible)", "15j (irreducible, 1st kind)", ...
};

IdentifyResult identify(const WignerSum& sum, const Catalog& catalog);

std::string symbol_name(const CatalogEntry& entry);

}  // namespace yutsis
