#pragma once

#include <vector>

#include "yutsis/graph.hpp"

namespace yutsis {

// A Hamiltonian cycle stored as the vertex chain v0 v1 ... v(n-1), with
// v(n-1) adjacent to v0. Normalized so v0 = 0 and v1 < v(n-1); each
// geometric cycle has exactly one representation.
using HamiltonianCycle = std::vector<int>;

// All Hamiltonian cycles, deduplicated over rotation and reflection, in
// lexicographic order of the vertex chain. Empty means non-Hamiltonian.
std::vector<HamiltonianCycle> hamiltonian_cycles(const CubicGraph& g);

// Short-circuits at the first cycle found.
bool is_hamiltonian(const CubicGraph& g);

// Validates that c is a Hamiltonian cycle of g. Throws NotACycle.
void check_cycle(const CubicGraph& g, const HamiltonianCycle& c);

}  // namespace yutsis
