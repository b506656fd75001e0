#include "doctest.h"
#include "polymin/gtcoeff.hpp"
#include "polymin/skew_tabular.hpp"
#include "polymin/verification.hpp"

using namespace polymin;

TEST_CASE("q-integer quotients") {
  CHECK(q_integer_quotient({}) == Polynomial{1});
  CHECK(q_integer_quotient({{4, 2}}) == Polynomial{1, 0, 1});
  // Gaussian binomial [4 choose 2] = [4][3]/([2][1]).
  CHECK(q_integer_quotient({{4, 2}, {3, 1}}) == Polynomial{1, 1, 2, 1, 1});
  CHECK_THROWS_AS(q_integer_quotient({{3, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(q_integer_quotient({{0, 1}}), std::invalid_argument);
}

TEST_CASE("RGF formulas") {
  CHECK(e7_rgf_formula(0) == Polynomial{1});
  CHECK(e6_rgf_formula(0, 0) == Polynomial{1});
  auto f1 = e7_rgf_formula(1);
  BigInt total = 0;
  for (const auto& c : f1) total += c;
  CHECK(total == 56);
  CHECK(f1.size() == 28);
  auto g = e6_rgf_formula(1, 1);
  total = 0;
  for (const auto& c : g) total += c;
  CHECK(total == 650);
  CHECK(e6_rgf_formula(2, 0) == e6_rgf_formula(0, 2));
}

TEST_CASE("symmetry and unimodality") {
  CHECK(is_symmetric({1, 2, 1}));
  CHECK_FALSE(is_symmetric({1, 2, 2}));
  CHECK(is_unimodal({1, 2, 2, 1}));
  CHECK(is_unimodal({}));
  CHECK_FALSE(is_unimodal({2, 1, 2}));
  CHECK(polynomial_to_string({1, 2, 3}) == "1 + 2q + 3q^2");
  CHECK(polynomial_to_string({0, 1}) == "q");
}

TEST_CASE("check_rgf_products") {
  for (auto L : {build_E7_lattice(1), build_E7_lattice(2), build_E6_lattice(E6Variant::OnePrime, 2),
                 build_E6_lattice(E6Variant::TwoParameter, 1, 1)}) {
    auto r = check_rgf_products(L);
    CAPTURE(L.describe());
    CHECK(r.ok);
    CHECK(r.matches_formula);
    CHECK(r.symmetric);
    CHECK(r.unimodal);
  }
}

TEST_CASE("check_character") {
  auto L = build_E7_lattice(2);
  auto rep = check_character(L.graph(), dynkin_E7(), {2, 0, 0, 0, 0, 0, 0});
  CHECK(rep.ok);
  CHECK(rep.dimension == 1463);
  CHECK(rep.distinct_weights == 939);
  CHECK_FALSE(rep.multiplicity_free);
  auto wrong = check_character(L.graph(), dynkin_E7(), {1, 0, 0, 0, 0, 0, 0});
  CHECK_FALSE(wrong.ok);
  CHECK_FALSE(wrong.failure.is_null());
}

TEST_CASE("certify_module on L_E7(k w1)") {
  for (int k : {0, 1, 2}) {
    auto L = build_E7_lattice(k);
    auto P = e7_coefficients(L, 2).value;
    auto cert = certify_module(L.graph(), P, dynkin_E7(), 2);
    CAPTURE(cert.data.dump());
    CHECK(cert.ok);
  }
}

TEST_CASE("certificates detect broken coefficients") {
  auto L = build_E7_lattice(2);
  auto P = e7_coefficients(L).value;
  auto D = dynkin_E7();
  SUBCASE("scaled edge breaks a crossing") {
    P[10] *= 2;
    auto cert = certify_module(L.graph(), P, D);
    CHECK_FALSE(cert.ok);
    CHECK_FALSE(cert.data["crossing"]["pass"].get<bool>());
    CHECK(cert.data["crossing"].contains("failure"));
  }
  SUBCASE("non-positive value fails positivity") {
    P[3] = 0;
    auto cert = certify_module(L.graph(), P, D);
    CHECK_FALSE(cert.ok);
    CHECK_FALSE(cert.data["positivity"]["pass"].get<bool>());
  }
  SUBCASE("wrong coefficient count") {
    P.pop_back();
    CHECK_THROWS_AS(check_diamond_relations(L.graph(), P, D), std::invalid_argument);
    CHECK_FALSE(certify_module(L.graph(), P, D).ok);
  }
}

TEST_CASE("diamond relations count and strong checks at k = 2") {
  auto L = build_E7_lattice(2);
  auto P = e7_coefficients(L, 4).value;
  auto rep = check_diamond_relations(L.graph(), P, dynkin_E7(), 4);
  CHECK(rep.ok);
  CHECK(rep.diamonds == 3212 + 792 + 308);
  CHECK(rep.strong_checks == 3212);
  CHECK(check_diamond_relations(L.graph(), P, dynkin_E7(), 1).diamonds == rep.diamonds);
}

TEST_CASE("diamond relations reject a swapped pair") {
  // Square 0 -> {1, 2} -> 3 with colors 1 and 3 of A3 (non-adjacent).
  EdgeColoredPoset sq(4, {{0, 1, color(1)}, {0, 2, color(3)}, {1, 3, color(3)}, {2, 3, color(1)}});
  auto D = dynkin_A(3);
  CHECK(check_diamond_relations(sq, {2, 3, 3, 2}, D).ok);
  // Product relation holds but the opposite edges differ.
  auto rep = check_diamond_relations(sq, {2, 3, 2, 3}, D);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failure.contains("edges"));
}

TEST_CASE("crossing relations on a skew lattice") {
  auto L = build_skew_lattice(2, {3, 3}, {2, 0});
  auto P = skew_coefficients(L);
  auto rep = check_crossing_relations(L.graph, P, {color(1), color(2)});
  CHECK(rep.ok);
  CHECK(rep.checks == 30);
}
