#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "polymin/color.hpp"
#include "polymin/poset.hpp"
#include "polymin/rational.hpp"

namespace polymin {

/// Simply laced Dynkin diagram. Node order fixes the coordinate order of
/// weights and roots.
struct DynkinDiagram {
  std::string name;
  std::vector<ColorId> nodes;
  std::vector<std::pair<int, int>> edges;

  int rank() const { return static_cast<int>(nodes.size()); }
  /// -1 if absent.
  int index_of(ColorId c) const;
  bool adjacent(int i, int j) const;
};

/// Chain 1-2-3-4-5'-6' with 5 attached to 4; nodes ordered 1,2,3,4,5,5',6'.
DynkinDiagram dynkin_E7();
/// Chain 1'-2'-3'-5'-6' with 4' attached to 3'; nodes ordered 1',...,6'.
DynkinDiagram dynkin_E6();
/// Chain 1-2-...-n.
DynkinDiagram dynkin_A(int n);

using CartanMatrix = std::vector<std::vector<int>>;
/// Coordinates in the fundamental-weight basis.
using Weight = std::vector<int>;
/// Coordinates in the simple-root basis.
using Root = std::vector<int>;

CartanMatrix cartan_matrix(const DynkinDiagram& D);

/// Positive roots by closure of the simple roots under simple reflections,
/// sorted by height then lexicographically. Throws for disconnected input.
std::vector<Root> positive_roots(const DynkinDiagram& D);

/// ψ: 1'->2, 2'->3, 3'->4, 4'->5, 5'->5', 6'->6'.
ColorId psi(ColorId e6_color);
/// Inverse of psi on its image.
ColorId psi_inverse(ColorId e7_color);

/// (m_i(t))_i over the nodes of D.
Weight weight_of(const EdgeColoredPoset& L, const DynkinDiagram& D, int t);
/// weight_of for every vertex.
std::vector<Weight> all_weights(const EdgeColoredPoset& L, const DynkinDiagram& D);

struct PhiReport {
  bool ok = true;
  long long edges_checked = 0;
  std::optional<int> edge;  // first violating edge
  std::optional<ColorId> j;
  int expected = 0;
  int found = 0;
};

/// m_j(s) - m_j(r) = a[j][i] for every edge r ->^i s and every node j.
PhiReport check_phi_structured(const EdgeColoredPoset& L, const DynkinDiagram& D);

/// Weyl dimension formula. Throws std::invalid_argument unless dominant.
BigInt weyl_dim(const DynkinDiagram& D, const Weight& lambda);

using Character = std::map<Weight, long long>;

/// Freudenthal multiplicities of every weight of V(lambda).
Character freudenthal_char(const DynkinDiagram& D, const Weight& lambda);

/// char is invariant under every simple reflection.
bool is_weyl_invariant(const DynkinDiagram& D, const Character& ch);

/// {"lambda":[..],"weights":[{"mu":[..],"mult":n}]}
nlohmann::json character_to_json(const Weight& lambda, const Character& ch);

}  // namespace polymin
