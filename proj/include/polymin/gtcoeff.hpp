#pragma once

#include <map>
#include <string>
#include <vector>

#include "polymin/lattices.hpp"
#include "polymin/rational.hpp"
#include "polymin/skew_tabular.hpp"

namespace polymin {

/// Frame of a J5-component: P = (k x5, c5'6 x2, c5'10 x2),
/// Q = (c5'4 x4, c5'12 x4, 0), both non-increasing.
struct J5Frame {
  int c5p4 = 0, c5p6 = 0, c5p10 = 0, c5p12 = 0, c6p5 = 0, c6p11 = 0;
  Partition P;
  Partition Q;
};

/// Frame of a J6-component: P' = (k x6, c58 x3), Q' = (c54 x4, c512 x4, 0).
struct J6Frame {
  int c54 = 0, c58 = 0, c512 = 0;
  Partition P;
  Partition Q;
};

/// Colors of the J5 and J6 components.
std::set<ColorId> j5_colors();
std::set<ColorId> j6_colors();

/// GT 5-parallelogram (columns 0..6, m = 9) of an E7 array. Throws
/// std::logic_error if the filled array breaks the GT inequalities.
GTParallelogram to_gt5(std::span<const int> c, int k);
/// GT 6-parallelogram (columns 0,1,2,3,4,5',6',7 stored as 0..7, m = 9).
GTParallelogram to_gt6(std::span<const int> c, int k);

/// Inverse of to_gt5 / to_gt6 on the cells that carry array entries.
/// Throws if two cells carrying the same entry disagree.
std::vector<int> from_gt5(const GTParallelogram& g);
std::vector<int> from_gt6(const GTParallelogram& g);

J5Frame j5_frame(std::span<const int> c, int k);
J6Frame j6_frame(std::span<const int> c, int k);

/// Column of the color in the 6-parallelogram: 1,2,3,4,5',6' -> 1..6.
int gt6_column(ColorId c);
ColorId gt6_color(int column);

/// m_i from the GT sum formula, i a column 1..n of g.
int gt_m_value(const GTParallelogram& g, int i);

/// Coefficients of every edge of L_E7(k w1) together with the record of
/// which routes were evaluated.
struct E7Coefficients {
  std::vector<BigRational> value;     // per edge
  long long route_checks = 0;         // edges evaluated by both routes
  long long route_mismatches = 0;
  std::string first_mismatch;
};

/// P^{(i)} of edge e via to_gt5 (colors 1-5) and/or to_gt6 (colors
/// 1,2,3,4,5',6'); both routes for colors 1-4, which must agree.
/// Throws std::logic_error on disagreement.
BigRational edge_coefficient_E7(const ArrayLattice& L, int e);

/// All edges, optionally in parallel. Never throws on route disagreement;
/// mismatches are counted instead.
E7Coefficients e7_coefficients(const ArrayLattice& L, unsigned threads = 1);

/// Coefficients of an E6 lattice transported from the matching psi(I6)
/// component of L_E7((a+b) w1). Throws if the isomorphism is not found.
std::vector<BigRational> e6_coefficients(const ArrayLattice& L6, unsigned threads = 1);

/// comp_{psi(I6)}(m) inside E7 for the distinguished maximum matching the
/// given E6 lattice, with the color isomorphism to L6 (component vertex ->
/// L6 vertex, colors mapped by psi^{-1}).
struct EmbeddedComponent {
  Component comp;
  int top = -1;  // vertex of E7 lattice
  std::vector<int> iso;
  bool found = false;
};
EmbeddedComponent embed_e6_in_e7(const ArrayLattice& L7, const ArrayLattice& L6);

}  // namespace polymin
