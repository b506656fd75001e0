#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "polymin/lattices.hpp"
#include "polymin/poset.hpp"
#include "polymin/rational.hpp"
#include "polymin/root_data.hpp"

namespace polymin {

struct DiamondReport {
  bool ok = true;
  long long diamonds = 0;
  long long strong_checks = 0;  // diamonds with distinct non-adjacent colors
  nlohmann::json failure;       // null when ok
};

/// For every diamond q -> r -> t, q -> s -> t:
///   P(s,t) P(r,t) = P(q,s) P(q,r),
/// and when the two colors are distinct and non-adjacent in D also
///   P(q,r) = P(s,t) and P(q,s) = P(r,t).
DiamondReport check_diamond_relations(const EdgeColoredPoset& L, const std::vector<BigRational>& P,
                                      const DynkinDiagram& D, unsigned threads = 1);

struct CrossingReport {
  bool ok = true;
  long long checks = 0;
  nlohmann::json failure;
};

/// sum_{q ->i r} P - sum_{r ->i s} P = m_i(r) for every vertex and color.
CrossingReport check_crossing_relations(const EdgeColoredPoset& L, const std::vector<BigRational>& P,
                                        const std::vector<ColorId>& colors);

struct Certificate {
  bool ok = true;
  nlohmann::json data;
};

/// Phi-structure + diamonds + crossings (+ positivity of every P).
Certificate certify_module(const EdgeColoredPoset& L, const std::vector<BigRational>& P, const DynkinDiagram& D,
                           unsigned threads = 1);

struct CharacterReport {
  bool ok = true;
  std::size_t distinct_weights = 0;
  long long dimension = 0;
  bool multiplicity_free = true;
  nlohmann::json failure;
};

/// Multiset {wt(t)} equals freudenthal_char(D, lambda).
CharacterReport check_character(const EdgeColoredPoset& L, const DynkinDiagram& D, const Weight& lambda);

using Polynomial = std::vector<BigInt>;

/// prod_j ([n_j]/[d_j])^{e_j} as an exact polynomial; throws if the
/// quotient is not a polynomial.
Polynomial q_integer_quotient(const std::vector<std::pair<int, int>>& numer_denom);

/// The quotient-of-products RGF formulas.
Polynomial e7_rgf_formula(int k);
Polynomial e6_rgf_formula(int a, int b);

bool is_symmetric(const std::vector<long long>& c);
bool is_unimodal(const std::vector<long long>& c);

struct RgfReport {
  bool ok = true;
  bool matches_formula = true;
  bool symmetric = true;
  bool unimodal = true;
  std::vector<long long> computed;
  Polynomial formula;
  Polynomial difference;  // computed - formula
};

/// Computed RGF of L against the formula for its family.
RgfReport check_rgf_products(const ArrayLattice& L);

std::string polynomial_to_string(const std::vector<long long>& c);
nlohmann::json polynomial_to_json(const Polynomial& p);

}  // namespace polymin
