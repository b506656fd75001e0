#pragma once

#include <span>

#include "polymin/color.hpp"

namespace polymin::detail {

struct PositionSpec {
  ColorId p;
  int q;
};

struct CoverSpec {
  PositionSpec lo;
  PositionSpec hi;
};

struct CompressionTable {
  const char* name;
  std::span<const PositionSpec> positions;
  std::span<const CoverSpec> covers;
};

enum class CellKind { Entry, Zero, K };

// One cell g_{col,j} of a GT parallelogram and where its value comes from.
struct GtCellSpec {
  int col;
  int j;
  CellKind kind;
  PositionSpec source;
};

// 0 = E7, 1 = E6 1', 2 = E6 6', 3 = combined E6 poset.
const CompressionTable& compression_table(int which);
std::span<const GtCellSpec> gt5_cells();
std::span<const GtCellSpec> gt6_cells();

}  // namespace polymin::detail
