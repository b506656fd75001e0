#include <random>

#include "doctest.h"
#include "polymin/gtcoeff.hpp"
#include "polymin/skew_tabular.hpp"
#include "polymin/sqrt_scalar.hpp"
#include "polymin/verification.hpp"

using namespace polymin;

namespace {

std::vector<ArrayLattice> array_lattices() {
  std::vector<ArrayLattice> out;
  for (int k : {0, 1, 2}) {
    out.push_back(build_E7_lattice(k));
    out.push_back(build_E6_lattice(E6Variant::OnePrime, k));
    out.push_back(build_E6_lattice(E6Variant::SixPrime, k));
    for (int a = 0; a <= k; ++a) out.push_back(build_E6_lattice(E6Variant::TwoParameter, a, k - a));
  }
  return out;
}

std::vector<SkewLattice> skew_lattices() {
  return {build_skew_lattice(2, {3, 3}, {2, 0}), build_skew_lattice(3, {2, 2, 1}, {1}),
          build_skew_lattice(2, {4, 2}, {1, 1}), build_skew_lattice(4, {2, 1, 1}, {0})};
}

}  // namespace

TEST_CASE("J(j(L)) is color-isomorphic to L") {
  for (const auto& L : array_lattices()) {
    CAPTURE(L.describe());
    auto back = down_set_lattice(join_irreducibles(L.graph()));
    CHECK(back.size() == L.size());
    CHECK(find_color_isomorphism(L.graph(), back).has_value());
  }
  for (const auto& S : skew_lattices()) {
    auto back = down_set_lattice(join_irreducibles(S.graph));
    CHECK(find_color_isomorphism(S.graph, back).has_value());
  }
}

TEST_CASE("j(J(P)) is isomorphic to P for the compression posets") {
  for (auto id : {CompressionPosetId::E7, CompressionPosetId::E6OnePrime, CompressionPosetId::E6SixPrime,
                  CompressionPosetId::E6Combined}) {
    auto P = compression_poset(id).poset();
    CHECK(find_poset_isomorphism(join_irreducibles(down_set_lattice(P)), P).has_value());
  }
}

TEST_CASE("GT conversions round-trip on every element of L_E7(2 w1)") {
  auto L = build_E7_lattice(2);
  for (int v = 0; v < static_cast<int>(L.size()); ++v) {
    auto c = L.array_values(v);
    auto g6 = to_gt6(c, 2);
    REQUIRE(from_gt6(g6) == c);
    auto back5 = from_gt5(to_gt5(c, 2));
    for (int i = 0; i < 27; ++i)
      if (back5[i] >= 0) REQUIRE(back5[i] == c[i]);
  }
}

TEST_CASE("sqrt_of(p)^2 = p on random rationals") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> base(1, 60), pw(0, 3);
  for (int i = 0; i < 1000; ++i) {
    // Products of small powers exercise the square-free reduction.
    BigInt num = 1, den = 1;
    for (int t = 0; t < 3; ++t) {
      BigInt b = base(rng), d = base(rng);
      for (int e = pw(rng); e > 0; --e) num *= b;
      for (int e = pw(rng); e > 0; --e) den *= d;
    }
    BigRational p(num, den);
    p.canonicalize();
    auto s = sqrt_of(p);
    CHECK(s.terms().size() == 1);
    CHECK((s * s) == SqrtScalar(p));
  }
}

TEST_CASE("crossing sums at every vertex and color") {
  for (int k : {1, 2}) {
    auto L = build_E7_lattice(k);
    auto P = e7_coefficients(L, 4).value;
    auto rep = check_crossing_relations(L.graph(), P, dynkin_E7().nodes);
    CHECK(rep.ok);
    CHECK(rep.checks == static_cast<long long>(L.size()) * 7);
  }
  for (const auto& L : array_lattices()) {
    if (L.family() == Family::E7 || L.bound() == 0) continue;
    auto P = e6_coefficients(L, 4);
    CAPTURE(L.describe());
    CHECK(check_crossing_relations(L.graph(), P, dynkin_E6().nodes).ok);
  }
  for (const auto& S : skew_lattices()) {
    std::vector<ColorId> cols;
    for (int i = 1; i <= S.n; ++i) cols.push_back(color(i));
    CHECK(check_crossing_relations(S.graph, skew_coefficients(S), cols).ok);
  }
}
