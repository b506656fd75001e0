#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polymin/poset.hpp"
#include "polymin/rational.hpp"

namespace polymin {

/// Non-increasing tuple of nonnegative integers.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);

/// GT (n+1)-parallelogram: entries g_{i,j} for columns i = 0..n+1 and
/// j in C_i = {i, i-1, ..., i-(m-1)}. Columns 0 and n+1 form the frame.
class GTParallelogram {
 public:
  GTParallelogram() = default;
  GTParallelogram(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  bool contains(int i, int j) const { return i >= 0 && i <= n_ + 1 && j <= i && j > i - m_; }
  int get(int i, int j) const { return g_[slot(i, j)]; }
  void set(int i, int j, int v) { g_[slot(i, j)] = v; }

  /// Q read from column 0: Q_t = g_{0,1-t}.
  Partition lower_frame() const;
  /// P read from column n+1: P_t = g_{n+1,n+2-t}.
  Partition upper_frame() const;

  /// g_{i-1,j} >= g_{i,j} and g_{i-1,j-1} <= g_{i,j} wherever defined.
  bool satisfies_inequalities() const;
  /// The entries of columns 1..n, column by column from j = i down.
  std::vector<int> interior() const;
  std::string str() const;

  friend bool operator==(const GTParallelogram&, const GTParallelogram&) = default;

 private:
  std::size_t slot(int i, int j) const { return static_cast<std::size_t>(i) * m_ + (i - j); }
  int n_ = 0;
  int m_ = 0;
  std::vector<int> g_;
};

/// L^skew_{A_n}(P/Q). Vertex order: lexicographic in interior().
struct SkewLattice {
  int n = 0;
  int m = 0;
  Partition P;
  Partition Q;
  std::vector<GTParallelogram> elements;
  EdgeColoredPoset graph;
  /// Cell (i,j) incremented along each edge.
  std::vector<std::pair<int, int>> edge_cell;

  /// -1 if g is not an element.
  int index_of(const GTParallelogram& g) const;

 private:
  friend SkewLattice build_skew_lattice(int, const Partition&, const Partition&, int);
  std::unordered_map<std::string, int> index_;
};

/// Frames are padded with zeros to length m (m = 0: the longer length).
/// Edge colors are the column numbers 1..n. Throws std::invalid_argument
/// for malformed frames.
SkewLattice build_skew_lattice(int n, const Partition& P, const Partition& Q, int m = 0);

/// P^{(i)} for the cover r -> s that increments g_{i,j}; s is the upper
/// element. Throws std::domain_error if a denominator factor vanishes or
/// the value is not positive.
BigRational gt_coefficient(const GTParallelogram& s, int i, int j);

/// gt_coefficient of every edge of L.
std::vector<BigRational> skew_coefficients(const SkewLattice& L);

}  // namespace polymin
