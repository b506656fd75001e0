#include <numeric>

#include "doctest.h"
#include "polymin/lattices.hpp"
#include "polymin/root_data.hpp"

using namespace polymin;

TEST_CASE("Dynkin diagrams and Cartan matrices") {
  auto E7 = dynkin_E7();
  auto a = cartan_matrix(E7);
  const int i4 = E7.index_of(color(4)), i5 = E7.index_of(color(5)), i5p = E7.index_of(color(5, true));
  CHECK(a[i4][i5] == -1);
  CHECK(a[i4][i5p] == -1);
  CHECK(a[i5][i5p] == 0);
  CHECK(a[E7.index_of(color(5, true))][E7.index_of(color(6, true))] == -1);
  for (int i = 0; i < 7; ++i) {
    CHECK(a[i][i] == 2);
    for (int j = 0; j < 7; ++j) CHECK(a[i][j] == a[j][i]);
  }
  auto E6 = dynkin_E6();
  auto b = cartan_matrix(E6);
  CHECK(b[E6.index_of(color(3, true))][E6.index_of(color(4, true))] == -1);
  CHECK(b[E6.index_of(color(3, true))][E6.index_of(color(5, true))] == -1);
  CHECK(b[E6.index_of(color(4, true))][E6.index_of(color(5, true))] == 0);
}

TEST_CASE("positive roots") {
  CHECK(positive_roots(dynkin_A(1)) == std::vector<Root>{{1}});
  auto a2 = positive_roots(dynkin_A(2));
  CHECK(a2 == std::vector<Root>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(positive_roots(dynkin_A(5)).size() == 15);
  CHECK(positive_roots(dynkin_E6()).size() == 36);
  CHECK(positive_roots(dynkin_E7()).size() == 63);
  DynkinDiagram bad{"X", {color(1), color(2)}, {}};
  CHECK_THROWS_AS(positive_roots(bad), std::invalid_argument);
}

TEST_CASE("psi") {
  CHECK(psi(color(1, true)) == color(2));
  CHECK(psi(color(4, true)) == color(5));
  CHECK(psi(color(5, true)) == color(5, true));
  CHECK(psi(color(6, true)) == color(6, true));
  for (int i = 1; i <= 6; ++i) CHECK(psi_inverse(psi(color(i, true))) == color(i, true));
  CHECK_THROWS(psi(color(1)));
  CHECK_THROWS(psi_inverse(color(1)));
}

TEST_CASE("weyl_dim") {
  CHECK(weyl_dim(dynkin_E7(), Weight(7, 0)) == 1);
  CHECK(weyl_dim(dynkin_E7(), {1, 0, 0, 0, 0, 0, 0}) == 56);
  CHECK(weyl_dim(dynkin_E7(), {2, 0, 0, 0, 0, 0, 0}) == 1463);
  CHECK(weyl_dim(dynkin_E6(), {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(weyl_dim(dynkin_E6(), {0, 0, 0, 0, 0, 1}) == 27);
  CHECK(weyl_dim(dynkin_E6(), {1, 0, 0, 0, 0, 1}) == 650);
  CHECK(weyl_dim(dynkin_A(2), {2, 1}) == 15);
  CHECK_THROWS_AS(weyl_dim(dynkin_A(2), {-1, 0}), std::invalid_argument);
}

TEST_CASE("freudenthal_char") {
  SUBCASE("sl2 string") {
    auto ch = freudenthal_char(dynkin_A(1), {4});
    CHECK(ch.size() == 5);
    for (int w = -4; w <= 4; w += 2) CHECK(ch.at({w}) == 1);
  }
  SUBCASE("E6 w1' is minuscule") {
    auto ch = freudenthal_char(dynkin_E6(), {1, 0, 0, 0, 0, 0});
    CHECK(ch.size() == 27);
    for (const auto& [w, m] : ch) CHECK(m == 1);
    CHECK(is_weyl_invariant(dynkin_E6(), ch));
  }
  SUBCASE("E7 2w1 has total dimension 1463") {
    auto D = dynkin_E7();
    Weight lambda{2, 0, 0, 0, 0, 0, 0};
    auto ch = freudenthal_char(D, lambda);
    long long total = 0;
    for (const auto& [w, m] : ch) total += m;
    CHECK(total == 1463);
    CHECK(weyl_dim(D, lambda) == static_cast<long>(total));
    CHECK(is_weyl_invariant(D, ch));
  }
  SUBCASE("A2 adjoint has a doubled zero weight") {
    auto ch = freudenthal_char(dynkin_A(2), {1, 1});
    CHECK(ch.at({0, 0}) == 2);
    CHECK(ch.size() == 7);
  }
  SUBCASE("JSON") {
    auto j = character_to_json({1}, freudenthal_char(dynkin_A(1), {1}));
    CHECK(j["weights"].size() == 2);
    CHECK(j["lambda"][0] == 1);
  }
}

TEST_CASE("weight_of on L_E7(k w1)") {
  for (int k : {1, 2}) {
    auto L = build_E7_lattice(k);
    auto D = dynkin_E7();
    CHECK(weight_of(L.graph(), D, L.max_element()) == Weight{k, 0, 0, 0, 0, 0, 0});
    CHECK(weight_of(L.graph(), D, L.min_element()) == Weight{-k, 0, 0, 0, 0, 0, 0});
  }
}

TEST_CASE("check_phi_structured") {
  CHECK(check_phi_structured(build_E7_lattice(1).graph(), dynkin_E7()).ok);
  CHECK(check_phi_structured(build_E7_lattice(2).graph(), dynkin_E7()).ok);
  // One color-1 edge: m goes -1 -> +1, a step of 2 = a[1][1].
  EdgeColoredPoset one(2, {{0, 1, color(1)}});
  CHECK(check_phi_structured(one, dynkin_A(1)).ok);
  // In A2 a color-1 edge must lower m_2 by one; here m_2 stays 0.
  auto rep = check_phi_structured(one, dynkin_A(2));
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.edge.has_value());
  CHECK(rep.j == color(2));
  CHECK(rep.expected == -1);
  CHECK(rep.found == 0);
}
