#pragma once

#include "yutsis/graph.hpp"

namespace fixtures {

using yutsis::CubicGraph;
using yutsis::EdgeList;

inline CubicGraph k4() {
  return CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// K_{3,3}, parts {0,1,2} and {3,4,5}.
inline CubicGraph utility() {
  return CubicGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

// Triangles {0,1,2} and {3,4,5} joined by the rungs i-(i+3).
inline CubicGraph prism3() {
  return CubicGraph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5).
inline CubicGraph petersen() {
  return CubicGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                         {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

// Petersen with vertex 0 expanded into the triangle {0, 10, 11}.
inline CubicGraph tietze() {
  return CubicGraph(12, {{0, 10}, {0, 11}, {10, 11},
                         {0, 1},  {10, 4}, {11, 5},
                         {1, 2},  {2, 3},  {3, 4},
                         {5, 7},  {7, 9},  {6, 9},  {6, 8}, {5, 8},
                         {1, 6},  {2, 7},  {3, 8},  {4, 9}});
}

// Vertices are the 3-bit words, edges flip one bit.
inline CubicGraph cube() {
  EdgeList edges;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (v < (v ^ (1 << bit))) edges.emplace_back(v, v ^ (1 << bit));
  return CubicGraph(8, std::move(edges));
}

// Two K4-with-a-subdivided-edge blocks joined by the bridge 4-9; the
// smallest 1-connected cubic graph.
inline CubicGraph bridged10() {
  return CubicGraph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
                         {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 9}, {8, 9},
                         {4, 9}});
}

}  // namespace fixtures
