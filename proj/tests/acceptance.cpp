// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "skew_golden.hpp"
#include "polymin/generators.hpp"
#include "polymin/gtcoeff.hpp"
#include "polymin/parallel.hpp"
#include "polymin/skew_tabular.hpp"
#include "polymin/sqrt_scalar.hpp"
#include "polymin/verification.hpp"

using namespace polymin;

namespace {

// Collects the first failure message of a criterion.
struct Check {
  std::string failure;
  void require(bool cond, const std::string& what) {
    if (!cond && failure.empty()) failure = what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_ms;  // 0: no runtime target
  std::function<void(Check&)> body;
};

unsigned threads() { return default_threads(); }

std::vector<ArrayLattice> e6_lattices(int max_total) {
  std::vector<ArrayLattice> out;
  for (int k = 0; k <= max_total; ++k) {
    out.push_back(build_E6_lattice(E6Variant::OnePrime, k));
    out.push_back(build_E6_lattice(E6Variant::SixPrime, k));
    for (int a = 0; a <= k; ++a) out.push_back(build_E6_lattice(E6Variant::TwoParameter, a, k - a));
  }
  return out;
}

void skew_example(Check& c) {
  auto L = build_skew_lattice(2, {3, 3}, {2, 0});
  c.require(L.graph.size() == 15, "expected 15 vertices, got " + std::to_string(L.graph.size()));
  auto rgf = rank_generating_function(L.graph);
  c.require(rgf == std::vector<long long>{1, 2, 3, 3, 3, 2, 1}, "RGF is " + polynomial_to_string(rgf));
  auto P = skew_coefficients(L);
  int matched = 0;
  for (const auto& ge : kSkewGolden) {
    int r = find_golden_element(L, ge.from), s = find_golden_element(L, ge.to);
    auto e = (r >= 0 && s >= 0) ? L.graph.find_edge(r, s) : std::nullopt;
    if (!e) {
      c.require(false, "golden edge missing from the lattice");
      continue;
    }
    bool ok = L.graph.edge(*e).color == color(ge.color) && to_string(P[*e]) == ge.value;
    c.require(ok, "edge value " + to_string(P[*e]) + " differs from " + ge.value);
    matched += ok;
  }
  c.require(matched == static_cast<int>(L.graph.edges().size()), "not every edge has a golden value");
  c.require(check_diamond_relations(L.graph, P, dynkin_A(2)).ok, "diamond relations fail");
  c.require(check_crossing_relations(L.graph, P, {color(1), color(2)}).ok, "crossing relations fail");
}

void minuscule(Check& c) {
  struct Case {
    ArrayLattice L;
    std::size_t size;
  };
  for (const auto& [L, size] : {Case{build_E7_lattice(1), 56}, Case{build_E6_lattice(E6Variant::OnePrime, 1), 27},
                                Case{build_E6_lattice(E6Variant::SixPrime, 1), 27}}) {
    auto D = L.diagram();
    c.require(L.size() == size, L.describe() + ": wrong size " + std::to_string(L.size()));
    c.require(weyl_dim(D, L.highest_weight()) == static_cast<long>(L.size()), L.describe() + ": weyl_dim differs");
    auto ch = check_character(L.graph(), D, L.highest_weight());
    c.require(ch.ok && ch.multiplicity_free, L.describe() + ": weights not multiplicity-free");
  }
}

void theorem_e7(Check& c) {
  const auto j4 = std::set<ColorId>{color(1), color(2), color(3), color(4)};
  for (int k : {0, 1, 2}) {
    auto L = build_E7_lattice(k);
    auto coeff = e7_coefficients(L, threads());
    long long low = 0;
    for (const Edge& e : L.graph().edges()) low += j4.count(e.color);
    c.require(coeff.route_mismatches == 0, "k=" + std::to_string(k) + ": route mismatch " + coeff.first_mismatch);
    c.require(coeff.route_checks == low, "k=" + std::to_string(k) + ": not every color-1..4 edge used both routes");
    auto cert = certify_module(L.graph(), coeff.value, dynkin_E7(), threads());
    c.require(cert.ok, "k=" + std::to_string(k) + ": " + cert.data.dump());
  }
}

void characters(Check& c) {
  for (int k : {1, 2}) {
    auto L = build_E7_lattice(k);
    c.require(check_character(L.graph(), L.diagram(), L.highest_weight()).ok, L.describe());
  }
  for (const auto& L : e6_lattices(2))
    c.require(check_character(L.graph(), L.diagram(), L.highest_weight()).ok, L.describe());
}

void brackets(Check& c) {
  auto run = [&](const ArrayLattice& L, const std::vector<BigRational>& P) {
    auto D = L.diagram();
    auto G = build_generator_matrices(L.graph(), P, D.nodes);
    auto rep = check_chevalley_relations(G, cartan_matrix(D));
    c.require(rep.ok, L.describe() + ": " + rep.first_failure);
  };
  auto L7 = build_E7_lattice(1);
  run(L7, e7_coefficients(L7, threads()).value);
  for (auto L : {build_E6_lattice(E6Variant::OnePrime, 1), build_E6_lattice(E6Variant::SixPrime, 1),
                 build_E6_lattice(E6Variant::TwoParameter, 1, 0), build_E6_lattice(E6Variant::TwoParameter, 0, 1)})
    run(L, e6_coefficients(L, threads()));
}

void rgf(Check& c) {
  std::vector<ArrayLattice> all{build_E7_lattice(0), build_E7_lattice(1), build_E7_lattice(2)};
  for (auto& L : e6_lattices(2)) all.push_back(std::move(L));
  for (const auto& L : all) {
    auto r = check_rgf_products(L);
    c.require(r.matches_formula, L.describe() + ": RGF differs from the product formula");
    c.require(r.symmetric && r.unimodal, L.describe() + ": RGF not symmetric and unimodal");
  }
}

void embeddings(Check& c) {
  auto D7 = dynkin_E7();
  for (int k : {0, 1, 2}) {
    auto L7 = build_E7_lattice(k);
    std::vector<ArrayLattice> six{build_E6_lattice(E6Variant::OnePrime, k),
                                  build_E6_lattice(E6Variant::SixPrime, k)};
    for (int a = 0; a <= k; ++a) six.push_back(build_E6_lattice(E6Variant::TwoParameter, a, k - a));
    for (const auto& L6 : six) {
      auto emb = embed_e6_in_e7(L7, L6);
      c.require(emb.found, L6.describe() + ": no color isomorphism");
      auto w7 = weight_of(L7.graph(), D7, emb.top);
      auto D6 = L6.diagram();
      Weight mapped(D6.rank());
      for (int i = 0; i < D6.rank(); ++i) mapped[i] = w7[D7.index_of(psi(D6.nodes[i]))];
      c.require(mapped == L6.highest_weight(), L6.describe() + ": maximal weights differ");
    }
  }
}

void properties(Check& c) {
  std::vector<ArrayLattice> all{build_E7_lattice(0), build_E7_lattice(1), build_E7_lattice(2)};
  for (auto& L : e6_lattices(2)) all.push_back(std::move(L));
  std::vector<SkewLattice> skew{build_skew_lattice(2, {3, 3}, {2, 0}), build_skew_lattice(3, {2, 2, 1}, {1}),
                                build_skew_lattice(2, {4, 2}, {1, 1})};

  for (const auto& L : all)
    c.require(find_color_isomorphism(L.graph(), down_set_lattice(join_irreducibles(L.graph()))).has_value(),
              L.describe() + ": J(j(L)) round trip");
  for (const auto& S : skew)
    c.require(find_color_isomorphism(S.graph, down_set_lattice(join_irreducibles(S.graph))).has_value(),
              "skew J(j(L)) round trip");

  const auto& L2 = all[2];
  for (int v = 0; v < static_cast<int>(L2.size()); ++v) {
    auto arr = L2.array_values(v);
    c.require(from_gt6(to_gt6(arr, 2)) == arr, "GT6 round trip");
    auto back5 = from_gt5(to_gt5(arr, 2));
    for (int i = 0; i < 27; ++i) c.require(back5[i] < 0 || back5[i] == arr[i], "GT5 round trip");
  }

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> num(1, 1000000), den(1, 1000000);
  for (int i = 0; i < 1000; ++i) {
    BigRational p(num(rng), den(rng));
    p.canonicalize();
    auto s = sqrt_of(p);
    c.require(s * s == SqrtScalar(p), "sqrt_of squaring fails for " + to_string(p));
  }

  for (const auto& L : all) {
    if (L.bound() == 0) continue;
    auto D = L.diagram();
    auto P = L.family() == Family::E7 ? e7_coefficients(L, threads()).value : e6_coefficients(L, threads());
    c.require(check_crossing_relations(L.graph(), P, D.nodes).ok, L.describe() + ": crossing sums");
  }
  for (const auto& S : skew) {
    std::vector<ColorId> cols;
    for (int i = 1; i <= S.n; ++i) cols.push_back(color(i));
    c.require(check_crossing_relations(S.graph, skew_coefficients(S), cols).ok, "skew crossing sums");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "skew lattice (3,3)/(2,0): size, RGF, golden edge values, diamonds, crossings", 1000, skew_example},
      {2, "minuscule sizes 56/27/27 equal weyl_dim, multiplicity-free", 1000, minuscule},
      {3, "certify_module on L_E7(k w1), k = 0,1,2, with route agreement", 60000, theorem_e7},
      {4, "lattice weights equal Freudenthal characters (E7 k <= 2, E6 totals <= 2)", 0, characters},
      {5, "Chevalley and Serre relations on E7 k = 1 and E6 total 1", 30000, brackets},
      {6, "RGFs equal the product formulas, symmetric and unimodal", 0, rgf},
      {7, "psi(I6)-components of L_E7(k w1) are color-isomorphic to the E6 lattices, k <= 2", 0, embeddings},
      {8, "J/j round trips, GT round trips, sqrt_of squaring, crossing sums", 0, properties},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (c.failure.empty() && cr.budget_ms > 0 && ms > cr.budget_ms) {
      std::ostringstream os;
      os << "runtime " << ms << " ms exceeds " << cr.budget_ms << " ms";
      c.failure = os.str();
    }
    bool ok = c.failure.empty();
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(), ms,
                ok ? "" : " -- ", c.failure.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
