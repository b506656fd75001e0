#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "polymin/color.hpp"

namespace polymin {

/// Finite poset with a color on every vertex. covers holds the Hasse
/// relation as pairs (u, v) meaning u is covered by v.
struct VertexColoredPoset {
  std::vector<std::string> names;
  std::vector<ColorId> colors;
  std::vector<std::pair<int, int>> covers;

  std::size_t size() const { return colors.size(); }
  /// Throws std::invalid_argument on cycles, transitive covers or bad indices.
  void validate() const;
  /// Rank of each vertex: length of the longest chain ending there.
  std::vector<int> levels() const;
};

struct Edge {
  int from = 0;
  int to = 0;
  ColorId color;
};

/// Edge-colored ranked poset given by its covering edges. Ranks are derived
/// from the edges and normalised to start at 0 on each connected piece.
class EdgeColoredPoset {
 public:
  EdgeColoredPoset() = default;
  EdgeColoredPoset(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t size() const { return rank_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  /// Indices of edges leaving / entering v.
  const std::vector<int>& up(int v) const { return up_[v]; }
  const std::vector<int>& down(int v) const { return down_[v]; }
  int rank(int v) const { return rank_[v]; }
  int length() const { return length_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;
  /// Sorted distinct edge colors.
  std::vector<ColorId> colors() const;
  /// Edge index of u -> v, if present.
  std::optional<int> find_edge(int u, int v) const;
  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<int> rank_;
  std::vector<std::string> labels_;
  int length_ = 0;
};

/// The lattice J_color(P) of order ideals of P, ordered by inclusion.
/// Elements are sorted by (size, bitmask). Optionally returns the ideal
/// (bitmask over P's vertices) of each element. Requires |P| <= 64.
EdgeColoredPoset down_set_lattice(const VertexColoredPoset& P,
                                  std::vector<std::uint64_t>* ideals = nullptr);

/// The subposet of join-irreducibles, colored by their unique lower edge.
/// `which` receives the lattice vertex of each join-irreducible.
VertexColoredPoset join_irreducibles(const EdgeColoredPoset& L, std::vector<int>* which = nullptr);

struct Component {
  EdgeColoredPoset poset;
  std::vector<int> vertices;  // original vertex of each component vertex (sorted)
};

/// comp_K(t): vertices reachable from t along edges whose color is in K.
Component component(const EdgeColoredPoset& L, const std::set<ColorId>& K, int t);

/// m_i(s) = rho_i(s) - delta_i(s) inside comp_{i}(s).
int m_value(const EdgeColoredPoset& L, ColorId i, int s);

/// m-values of every vertex for every color in `colors`: result[v][c].
std::vector<std::vector<int>> m_values(const EdgeColoredPoset& L, const std::vector<ColorId>& colors);

/// Coefficient list of RGF(L; q).
std::vector<long long> rank_generating_function(const EdgeColoredPoset& L);

/// Brute-force meet/join existence check, O(|L|^2 |L| / 64).
bool is_lattice(const EdgeColoredPoset& L);

struct DiamondColoringReport {
  bool ok = true;
  long long diamonds = 0;
  std::optional<std::array<int, 4>> failure;  // q, r, s, t
};

/// Opposite edges of every diamond carry the same color.
DiamondColoringReport check_diamond_coloring(const EdgeColoredPoset& L);

using ColorMap = std::function<ColorId(ColorId)>;

/// Color-preserving isomorphism of vertex-colored posets (a's colors are
/// passed through `relabel` first). Rank-layered backtracking.
std::optional<std::vector<int>> find_poset_isomorphism(const VertexColoredPoset& a,
                                                       const VertexColoredPoset& b,
                                                       const ColorMap& relabel = {});

/// Color isomorphism of distributive lattices: matches the posets of
/// join-irreducibles, extends to ideals, then checks every edge.
/// Returns the image in b of each vertex of a.
std::optional<std::vector<int>> find_color_isomorphism(const EdgeColoredPoset& a,
                                                       const EdgeColoredPoset& b,
                                                       const ColorMap& relabel = {});

nlohmann::json to_json(const EdgeColoredPoset& L);
nlohmann::json to_json(const VertexColoredPoset& P);
/// Graphviz DOT, edges drawn upward and labelled by color.
std::string to_dot(const EdgeColoredPoset& L, const std::string& name = "L");

}  // namespace polymin
