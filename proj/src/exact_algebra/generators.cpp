#include "polymin/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace polymin {

GeneratorMatrices build_generator_matrices(const EdgeColoredPoset& L, const std::vector<BigRational>& coefficients,
                                           const std::vector<ColorId>& colors) {
  if (coefficients.size() != L.edges().size()) throw std::invalid_argument("generators: one coefficient per edge");
  const std::size_t n = L.size();
  GeneratorMatrices G;
  G.colors = colors;
  for (std::size_t c = 0; c < colors.size(); ++c) {
    G.X.emplace_back(n, n);
    G.Y.emplace_back(n, n);
    G.H.emplace_back(n, n);
  }
  auto index_of = [&](ColorId c) -> std::ptrdiff_t {
    for (std::size_t i = 0; i < colors.size(); ++i)
      if (colors[i] == c) return static_cast<std::ptrdiff_t>(i);
    return -1;
  };
  for (std::size_t e = 0; e < L.edges().size(); ++e) {
    const Edge& ed = L.edge(static_cast<int>(e));
    auto c = index_of(ed.color);
    if (c < 0) throw std::invalid_argument("generators: edge color not in color list");
    SqrtScalar x = sqrt_of(coefficients[e]);
    G.X[c].add(ed.to, ed.from, x);
    G.Y[c].add(ed.from, ed.to, x);
  }
  auto m = m_values(L, colors);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t c = 0; c < colors.size(); ++c) G.H[c].add(v, v, SqrtScalar(static_cast<long>(m[v][c])));
  return G;
}

namespace {

ScalarMatrix ad_power(const ScalarMatrix& a, ScalarMatrix b, int power) {
  for (int k = 0; k < power; ++k) b = commutator(a, b);
  return b;
}

}  // namespace

BracketReport check_chevalley_relations(const GeneratorMatrices& G, const std::vector<std::vector<int>>& cartan) {
  BracketReport rep;
  const std::size_t r = G.colors.size();
  if (cartan.size() != r) throw std::invalid_argument("brackets: Cartan matrix size mismatch");
  const std::size_t n = r ? G.X[0].rows() : 0;
  const ScalarMatrix zero(n, n);
  auto expect = [&](bool ok, const std::string& what) {
    ++rep.relations_checked;
    if (!ok && rep.ok) {
      rep.ok = false;
      rep.first_failure = what;
    }
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const std::string tag = "(" + G.colors[i].str() + "," + G.colors[j].str() + ")";
      const int a_ji = cartan[j][i];
      expect(commutator(G.X[i], G.Y[j]) == (i == j ? G.H[i] : zero), "[X_i,Y_j] " + tag);
      expect(commutator(G.H[i], G.H[j]) == zero, "[H_i,H_j] " + tag);
      expect(commutator(G.H[i], G.X[j]) == G.X[j].scaled(SqrtScalar(static_cast<long>(a_ji))), "[H_i,X_j] " + tag);
      expect(commutator(G.H[i], G.Y[j]) == G.Y[j].scaled(SqrtScalar(static_cast<long>(-a_ji))), "[H_i,Y_j] " + tag);
      if (i != j) {
        expect(ad_power(G.X[i], G.X[j], 1 - a_ji) == zero, "Serre X " + tag);
        expect(ad_power(G.Y[i], G.Y[j], 1 - a_ji) == zero, "Serre Y " + tag);
      }
    }
  return rep;
}

nlohmann::json matrix_to_json(ColorId color, const ScalarMatrix& M) {
  nlohmann::json entries = nlohmann::json::array();
  // Row-major order for readability; collect then sort.
  std::vector<std::tuple<std::size_t, std::size_t, const SqrtScalar*>> all;
  for (std::size_t c = 0; c < M.cols(); ++c)
    for (const auto& [row, v] : M.column(c)) all.emplace_back(row, c, &v);
  std::sort(all.begin(), all.end());
  for (const auto& [row, c, v] : all) entries.push_back({row, c, v->to_json()});
  return {{"color", color.str()}, {"rows", M.rows()}, {"cols", M.cols()}, {"entries", entries}};
}

nlohmann::json matrix_to_squared_json(ColorId color, const ScalarMatrix& M) {
  nlohmann::json entries = nlohmann::json::array();
  std::vector<std::tuple<std::size_t, std::size_t, const SqrtScalar*>> all;
  for (std::size_t c = 0; c < M.cols(); ++c)
    for (const auto& [row, v] : M.column(c)) all.emplace_back(row, c, &v);
  std::sort(all.begin(), all.end());
  for (const auto& [row, c, v] : all) {
    SqrtScalar sq = (*v) * (*v);
    if (!sq.is_rational()) throw std::logic_error("squared export: entry is not a single square root");
    entries.push_back({row, c, to_string(sq.rational_part())});
  }
  return {{"color", color.str()}, {"rows", M.rows()}, {"cols", M.cols()}, {"entries", entries}};
}

}  // namespace polymin
