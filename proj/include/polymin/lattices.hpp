#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "polymin/poset.hpp"
#include "polymin/root_data.hpp"

namespace polymin {

/// A vertex (p,q) of a compression poset: its color and its rank.
struct Position {
  ColorId p;
  int q = 0;
  auto operator<=>(const Position&) const = default;
  std::string str() const;  // "p,q"
};

enum class CompressionPosetId { E7, E6OnePrime, E6SixPrime, E6Combined };

/// Built-in compression poset. Positions are listed by rank; covers are
/// (lower, upper) index pairs.
struct CompressionPosetData {
  std::string name;
  std::vector<Position> positions;
  std::vector<std::pair<int, int>> covers;

  int index_of(Position pos) const;  // throws if absent
  VertexColoredPoset poset() const;
  /// Indices of positions >= / <= the given one (inclusive).
  std::vector<int> up_set(int i) const;
  std::vector<int> down_set(int i) const;
};

const CompressionPosetData& compression_poset(CompressionPosetId id);

enum class Family { E7, E6OnePrime, E6SixPrime, E6TwoParameter };

/// A polyminuscule lattice: monotone integer arrays over a compression
/// poset, vertices in lexicographic order of the arrays.
class ArrayLattice {
 public:
  Family family() const { return family_; }
  /// Upper bound of the entries: k, or a+b for the two-parameter family.
  int bound() const { return bound_; }
  int a() const { return a_; }
  int b() const { return b_; }
  const CompressionPosetData& data() const { return *data_; }
  const EdgeColoredPoset& graph() const { return graph_; }
  std::size_t size() const { return graph_.size(); }
  std::size_t width() const { return data_->positions.size(); }

  std::span<const std::uint8_t> array(int v) const;
  std::vector<int> array_values(int v) const;
  /// -1 if the array is not an element.
  int index_of(std::span<const int> values) const;
  /// Position index incremented along edge e.
  int edge_position(int e) const { return edge_position_[e]; }
  int max_element() const;
  int min_element() const;

  DynkinDiagram diagram() const;
  /// Highest weight in the diagram's node order.
  Weight highest_weight() const;
  std::string describe() const;

  /// {"c":{"p,q":value}}
  nlohmann::json element_to_json(int v) const;

 private:
  friend ArrayLattice build_array_lattice(Family, int, int, std::size_t);

  Family family_ = Family::E7;
  int bound_ = 0;
  int a_ = 0;
  int b_ = 0;
  const CompressionPosetData* data_ = nullptr;
  std::vector<std::uint8_t> values_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> edge_position_;
  EdgeColoredPoset graph_;
};

/// Generic builder; `p1`, `p2` are k (and unused) or a, b. max_size > 0
/// aborts enumeration beyond that many elements (std::length_error).
ArrayLattice build_array_lattice(Family family, int p1, int p2 = 0, std::size_t max_size = 0);

ArrayLattice build_E7_lattice(int k, std::size_t max_size = 0);

enum class E6Variant { OnePrime, SixPrime, TwoParameter };
/// L_E6(k w1'), L_E6(k w6') (b ignored) or L_E6(a w1' + b w6').
ArrayLattice build_E6_lattice(E6Variant variant, int a, int b = 0, std::size_t max_size = 0);

enum class MaxKind { M, MPrime, MDoublePrime, MTilde };

/// Distinguished maximal arrays of L_E7(k w1). MTilde requires a + b = k.
std::vector<int> distinguished_max(MaxKind kind, int k, int a = 0, int b = 0);

/// The colors I6 mapped by psi: {2,3,4,5,5',6'}.
std::set<ColorId> psi_image_colors();

}  // namespace polymin
