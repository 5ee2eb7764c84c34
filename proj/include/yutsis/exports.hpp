#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "yutsis/graph.hpp"
#include "yutsis/hamilton.hpp"

namespace yutsis {

// Graphviz digraph. Undirected input is oriented low-to-high; reducible
// graphs mark their cut witness edges red. Output is byte-stable.
std::string export_dot(const CubicGraph& g);
std::string export_dot(const DirectedCubicGraph& g);

// All-carbon ring along the given Hamiltonian cycle. Every bond outside the
// emitted chain (the chords and the bond closing the ring) becomes a ring
// closure, numbered in order of (first endpoint, second endpoint) cycle
// position; numbers above 9 use the '%nn' form.
std::string export_smiles(const CubicGraph& g, const HamiltonianCycle& c);

// Closure-number matching only, no chemistry: bond list of a SMILES string
// as produced by export_smiles, endpoints in emission order.
EdgeList parse_smiles_bonds(const std::string& smiles);

struct Coordinates {
  std::vector<std::array<double, 3>> xyz;
};

// V2000 molfile: n carbon atoms, 3n/2 single bonds, zero coordinates unless
// provided.
std::string export_molfile(const CubicGraph& g,
                           const std::optional<Coordinates>& coordinates = std::nullopt);

}  // namespace yutsis
