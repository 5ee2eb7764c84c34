#pragma once

#include <vector>

#include "yutsis/graph.hpp"

namespace yutsis {

// All connected simple cubic graphs on n vertices, one per isomorphism
// class, in canonical order. n must be even and >= 4. The counts for
// n = 4..14 are 1, 2, 5, 19, 85, 509.
std::vector<CubicGraph> enumerate_cubic(int n);

}  // namespace yutsis
