#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yutsis/graph.hpp"
#include "yutsis/hamilton.hpp"

namespace yutsis {

// Chord distances of a Hamiltonian cubic graph relative to one cycle: entry
// i is the signed number of steps along the cycle from vertex i to the far
// end of its chord, in (-n/2, n/2], smallest magnitude, positive on a draw.
// 0 and +-1 never occur in a simple graph.
using LcfVector = std::vector<int>;

LcfVector encode_cycle(const CubicGraph& g, const HamiltonianCycle& c);

// Shortest applicable text form: repeated block "[b]^f" first, else the
// inverted palindrome "[a,...,x;-]", else the plain list.
std::string contract(const LcfVector& v);

// Parse and expand a notation string to the full distance vector.
// Grammar: '[' INT (',' INT)* (';' '-')? ']' ('^' POSINT)?
LcfVector expand(const std::string& text);

// Ring 0-1-...-(n-1)-0 plus the chords; second member is that cycle.
std::pair<CubicGraph, HamiltonianCycle> decode(const std::string& text);

// Lexicographically least distance vector over every Hamiltonian cycle,
// rotation and direction, contracted. Absent for non-Hamiltonian graphs.
// Distinct on all catalog graphs, so it doubles as a signature.
std::optional<std::string> canonical_lcf(const CubicGraph& g);

// One canonical string per Hamiltonian cycle, deduplicated and sorted by
// the underlying vector; the first entry equals canonical_lcf.
std::vector<std::string> cycle_lcf_strings(const CubicGraph& g);

// True iff the two notations describe isomorphic graphs.
bool lcf_equivalent(const std::string& a, const std::string& b);

}  // namespace yutsis
