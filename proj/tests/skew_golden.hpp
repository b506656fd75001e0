#pragma once

#include <array>

#include "polymin/skew_tabular.hpp"

struct GoldenEdge {
  std::array<int, 4> from;  // g10, g11, g21, g22
  std::array<int, 4> to;
  int color;
  const char* value;
};

// Circled edge values of L^skew_{A2}((3,3)/(2,0)).
inline const GoldenEdge kSkewGolden[] = {
    {{0, 2, 0, 3}, {0, 3, 0, 3}, 1, "1"},   {{0, 2, 0, 3}, {0, 2, 1, 3}, 2, "2"},
    {{0, 2, 1, 3}, {1, 2, 1, 3}, 1, "4/3"}, {{0, 3, 0, 3}, {0, 3, 1, 3}, 2, "3"},
    {{0, 3, 1, 3}, {1, 3, 1, 3}, 1, "2/3"}, {{0, 2, 1, 3}, {0, 3, 1, 3}, 1, "2/3"},
    {{1, 2, 1, 3}, {1, 3, 1, 3}, 1, "4/3"}, {{0, 2, 1, 3}, {0, 2, 2, 3}, 2, "2"},
    {{0, 3, 1, 3}, {0, 3, 2, 3}, 2, "4"},   {{1, 2, 1, 3}, {1, 2, 2, 3}, 2, "1"},
    {{1, 3, 1, 3}, {1, 3, 2, 3}, 2, "2"},   {{0, 2, 2, 3}, {0, 3, 2, 3}, 1, "1/3"},
    {{1, 2, 2, 3}, {1, 3, 2, 3}, 1, "2/3"}, {{2, 2, 2, 3}, {2, 3, 2, 3}, 1, "2"},
    {{0, 2, 2, 3}, {1, 2, 2, 3}, 1, "8/3"}, {{1, 2, 2, 3}, {2, 2, 2, 3}, 1, "3"},
    {{0, 3, 2, 3}, {1, 3, 2, 3}, 1, "4/3"}, {{1, 3, 2, 3}, {2, 3, 2, 3}, 1, "1"},
    {{0, 3, 3, 3}, {1, 3, 3, 3}, 1, "2"},   {{1, 3, 3, 3}, {2, 3, 3, 3}, 1, "2"},
    {{0, 3, 2, 3}, {0, 3, 3, 3}, 2, "3"},   {{1, 3, 2, 3}, {1, 3, 3, 3}, 2, "2"},
    {{2, 3, 2, 3}, {2, 3, 3, 3}, 2, "1"},
};

// Vertex of L with interior (g10, g11, g21, g22), or -1.
inline int find_golden_element(const polymin::SkewLattice& L, const std::array<int, 4>& g) {
  for (int v = 0; v < static_cast<int>(L.elements.size()); ++v) {
    const auto& e = L.elements[v];
    if (e.get(1, 0) == g[0] && e.get(1, 1) == g[1] && e.get(2, 1) == g[2] && e.get(2, 2) == g[3]) return v;
  }
  return -1;
}
