#include "doctest.h"
#include "skew_golden.hpp"
#include "polymin/root_data.hpp"
#include "polymin/skew_tabular.hpp"
#include "polymin/verification.hpp"

using namespace polymin;

TEST_CASE("partitions") {
  CHECK(is_partition({3, 3, 0}));
  CHECK(is_partition({}));
  CHECK_FALSE(is_partition({1, 2}));
  CHECK_FALSE(is_partition({2, -1}));
}

TEST_CASE("GT parallelogram frames") {
  GTParallelogram g(2, 2);
  CHECK(g.contains(0, 0));
  CHECK(g.contains(0, -1));
  CHECK_FALSE(g.contains(0, 1));
  CHECK_FALSE(g.contains(1, -1));
  CHECK(g.contains(3, 2));
  CHECK_FALSE(g.contains(4, 4));
  g.set(0, 0, 2);
  g.set(0, -1, 0);
  g.set(3, 3, 3);
  g.set(3, 2, 3);
  CHECK(g.lower_frame() == Partition{2, 0});
  CHECK(g.upper_frame() == Partition{3, 3});
}

TEST_CASE("skew lattice (3,3)/(2,0)") {
  auto L = build_skew_lattice(2, {3, 3}, {2, 0});
  REQUIRE(L.graph.size() == 15);
  CHECK(L.graph.edges().size() == 23);
  CHECK(rank_generating_function(L.graph) == std::vector<long long>{1, 2, 3, 3, 3, 2, 1});
  CHECK(is_lattice(L.graph));
  CHECK(check_diamond_coloring(L.graph).ok);
  for (const auto& g : L.elements) {
    CHECK(g.satisfies_inequalities());
    CHECK(g.lower_frame() == Partition{2, 0});
    CHECK(g.upper_frame() == Partition{3, 3});
    CHECK(L.index_of(g) >= 0);
  }

  auto P = skew_coefficients(L);
  int matched = 0;
  for (const auto& ge : kSkewGolden) {
    int r = find_golden_element(L, ge.from), s = find_golden_element(L, ge.to);
    REQUIRE(r >= 0);
    REQUIRE(s >= 0);
    auto e = L.graph.find_edge(r, s);
    REQUIRE(e.has_value());
    CHECK(L.graph.edge(*e).color == color(ge.color));
    CHECK(to_string(P[*e]) == ge.value);
    ++matched;
  }
  CHECK(matched == 23);

  auto D = dynkin_A(2);
  CHECK(check_diamond_relations(L.graph, P, D).ok);
  CHECK(check_crossing_relations(L.graph, P, {color(1), color(2)}).ok);
}

TEST_CASE("a single-column lattice") {
  auto L = build_skew_lattice(1, {1}, {0}, 2);
  REQUIRE(L.graph.size() == 2);
  REQUIRE(L.graph.edges().size() == 1);
  auto P = skew_coefficients(L);
  CHECK(P[0] == 1);
}

TEST_CASE("equal frames give a one-element lattice") {
  auto L = build_skew_lattice(3, {2, 1}, {2, 1});
  CHECK(L.graph.size() == 1);
  CHECK(L.graph.edges().empty());
}

TEST_CASE("A_n skew lattices satisfy the module relations") {
  struct Case {
    int n;
    Partition P, Q;
  };
  for (const auto& c : {Case{1, {2}, {0}}, Case{2, {2, 1}, {0}}, Case{3, {2, 2, 1}, {1}}, Case{2, {4, 2}, {1, 1}},
                        Case{3, {3, 1, 0}, {0, 0, 0}}}) {
    auto L = build_skew_lattice(c.n, c.P, c.Q);
    CAPTURE(L.graph.size());
    auto P = skew_coefficients(L);
    for (const auto& p : P) CHECK(p > 0);
    std::vector<ColorId> cols;
    for (int i = 1; i <= c.n; ++i) cols.push_back(color(i));
    CHECK(check_diamond_relations(L.graph, P, dynkin_A(c.n)).ok);
    CHECK(check_crossing_relations(L.graph, P, cols).ok);
    CHECK(check_phi_structured(L.graph, dynkin_A(c.n)).ok);
  }
}

TEST_CASE("malformed frames are rejected") {
  CHECK_THROWS_AS(build_skew_lattice(2, {3, 1}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(build_skew_lattice(2, {1, 3}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(build_skew_lattice(2, {3}, {4}), std::invalid_argument);
  CHECK_THROWS_AS(build_skew_lattice(0, {1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(build_skew_lattice(2, {3, 3, 3}, {0}, 2), std::invalid_argument);
}
