#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "yutsis/graph.hpp"

namespace yutsis {

// (Wiener, diameter, girth, Estrada) tuple, a practically unique index for
// catalog graphs. The Estrada index is held as an integer scaled by 10^5 so
// key equality and the printed caption are exact.
struct InvariantKey {
  int wiener = 0;
  int diameter = 0;
  int girth = 0;
  std::int64_t estrada_scaled = 0;

  // "W75 d2 g5 EE34.21829"
  std::string to_string() const;

  friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

// Sum of shortest-path distances over unordered vertex pairs.
int wiener(const CubicGraph& g);

int diameter(const CubicGraph& g);

// Length of the shortest cycle; cubic graphs always contain one.
int girth(const CubicGraph& g);

// Sum of exp over the adjacency spectrum, unrounded.
double estrada(const CubicGraph& g);

// Adjacency eigenvalues in ascending order, by cyclic Jacobi rotations.
// Absolute accuracy is far below the 10^-7 needed for stable 5-decimal
// rounding. Throws EigenNonConvergence if 100 sweeps do not settle.
std::vector<double> adjacency_eigenvalues(const CubicGraph& g);

InvariantKey invariant_key(const CubicGraph& g);

std::int64_t scale_estrada(double ee);  // round half away from zero at 1e-5

}  // namespace yutsis
