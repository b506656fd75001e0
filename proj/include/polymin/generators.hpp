#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "polymin/poset.hpp"
#include "polymin/rational.hpp"
#include "polymin/sparse_matrix.hpp"
#include "polymin/sqrt_scalar.hpp"

namespace polymin {

using ScalarMatrix = SparseMatrix<SqrtScalar>;

/// Representing matrices of x_i, y_i, h_i on the basis {v_t : t in L}, in
/// the lattice's vertex order.
struct GeneratorMatrices {
  std::vector<ColorId> colors;
  std::vector<ScalarMatrix> X;
  std::vector<ScalarMatrix> Y;
  std::vector<ScalarMatrix> H;
};

/// X_i has X_{s,r} = sqrt(P) at (s, r) for each edge r -> s of color i,
/// Y_i the same value at (r, s), H_i = diag(m_i). coefficients[e] is the
/// rational P of edge e.
GeneratorMatrices build_generator_matrices(const EdgeColoredPoset& L, const std::vector<BigRational>& coefficients,
                                           const std::vector<ColorId>& colors);

struct BracketReport {
  bool ok = true;
  long long relations_checked = 0;
  std::string first_failure;
};

/// [X_i,Y_j] = delta_ij H_i, [H_i,X_j] = a_ji X_j, [H_i,Y_j] = -a_ji Y_j,
/// [H_i,H_j] = 0 and both Serre relations, exactly. cartan[j][i] = a_ji is
/// indexed like G.colors.
BracketReport check_chevalley_relations(const GeneratorMatrices& G, const std::vector<std::vector<int>>& cartan);

/// {"color":..,"entries":[[row,col,{"terms":{"d":"num/den"}}]]}
nlohmann::json matrix_to_json(ColorId color, const ScalarMatrix& M);
/// Same layout with the rational square of each entry.
nlohmann::json matrix_to_squared_json(ColorId color, const ScalarMatrix& M);

}  // namespace polymin
